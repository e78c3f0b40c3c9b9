"""Jaro similarity and the cheap upper bound used to prune corpus scans.

Scores are plain floats in [0, 1]. Comparison is case-sensitive and operates
on Unicode code points; callers are expected to NFC-normalize text once at
ingestion (see corpus.load_wordlist), not here.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass


@dataclass(frozen=True)
class MatchProfile:
    """Raw counts behind a Jaro score.

    matches: characters of the first string paired with an unconsumed equal
    character of the second within the match window.
    transpositions: half the number of paired characters whose relative order
    differs between the two matched sequences, rounded down.
    """

    matches: int
    transpositions: int
    len1: int
    len2: int


def match_profile(s1: str, s2: str) -> MatchProfile:
    """Count Jaro matches and transpositions between two strings.

    The match window is floor(max(len1, len2) / 2) - 1, clamped to 0. Total
    function: empty inputs yield a zero profile.
    """
    len1, len2 = len(s1), len(s2)
    if len1 == 0 or len2 == 0:
        return MatchProfile(0, 0, len1, len2)
    if s1 == s2:
        return MatchProfile(len1, 0, len1, len2)

    window = max(len1, len2) // 2 - 1
    if window < 0:
        window = 0

    flags1 = bytearray(len1)
    flags2 = bytearray(len2)
    matches = 0
    for i in range(len1):
        lo = i - window if i > window else 0
        hi = i + window + 1
        if hi > len2:
            hi = len2
        c = s1[i]
        for j in range(lo, hi):
            if not flags2[j] and c == s2[j]:
                flags1[i] = 1
                flags2[j] = 1
                matches += 1
                break
    if matches == 0:
        return MatchProfile(0, 0, len1, len2)

    # Walk both matched sequences in string order; each mismatched pair is one
    # transposition, so halve the mismatch count (floored).
    out_of_order = 0
    k = 0
    for i in range(len1):
        if flags1[i]:
            while not flags2[k]:
                k += 1
            if s1[i] != s2[k]:
                out_of_order += 1
            k += 1
    return MatchProfile(matches, out_of_order // 2, len1, len2)


def score_from_profile(profile: MatchProfile) -> float:
    """Turn a match profile into the Jaro score.

    Two empty strings are identical, so they score 1.0; a single empty string
    has no matches and scores 0.0.
    """
    if profile.len1 == 0 and profile.len2 == 0:
        return 1.0
    m = profile.matches
    if m == 0:
        return 0.0
    return (m / profile.len1 + m / profile.len2 + (m - profile.transpositions) / m) / 3.0


def jaro(s1: str, s2: str) -> float:
    """Jaro similarity of two strings, in [0, 1]."""
    return score_from_profile(match_profile(s1, s2))


def char_frequencies(s: str) -> Counter[str]:
    """Character frequency summary used by jaro_upper_bound."""
    return Counter(s)


def multiset_intersection_size(freq1: Counter[str], freq2: Counter[str]) -> int:
    """Size of the multiset intersection of two frequency summaries."""
    if len(freq2) < len(freq1):
        freq1, freq2 = freq2, freq1
    total = 0
    for ch, n in freq1.items():
        other = freq2.get(ch, 0)
        total += n if n < other else other
    return total


def jaro_upper_bound(
    freq1: Counter[str], len1: int, freq2: Counter[str], len2: int
) -> float:
    """Upper bound on jaro(s1, s2) from character frequencies alone.

    Ignores the match window, so the multiset intersection size bounds the
    match count from above, and the transposition term is bounded by 1.
    Guaranteed >= the true Jaro score for every input pair.
    """
    if len1 == 0 or len2 == 0:
        # Both empty strings are identical (score 1.0); one empty scores 0.
        return 1.0 if len1 == len2 else 0.0
    m_max = multiset_intersection_size(freq1, freq2)
    if m_max == 0:
        return 0.0
    return (m_max / len1 + m_max / len2 + 1.0) / 3.0


def jaro_upper_bound_strings(s1: str, s2: str) -> float:
    """Convenience wrapper computing the bound directly from strings."""
    return jaro_upper_bound(char_frequencies(s1), len(s1), char_frequencies(s2), len(s2))
