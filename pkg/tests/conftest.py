"""Shared fixtures and independent reference implementations.

The reference scorer below is written from the textbook definition with
boolean flag arrays and explicit transposition counting. It shares no code
with the package and exists so the fast implementations have something
honest to disagree with.
"""

from __future__ import annotations

import random

import pytest

from pwsim import Corpus, FragmentDictionary, builtin_dictionary


def reference_jaro(s1: str, s2: str) -> float:
    len1, len2 = len(s1), len(s2)
    if len1 == 0 and len2 == 0:
        return 1.0
    if len1 == 0 or len2 == 0:
        return 0.0
    window = max(len1, len2) // 2 - 1
    if window < 0:
        window = 0
    used1 = [False] * len1
    used2 = [False] * len2
    matches = 0
    for i in range(len1):
        lo = i - window if i - window > 0 else 0
        hi = i + window + 1 if i + window + 1 < len2 else len2
        for j in range(lo, hi):
            if not used2[j] and s1[i] == s2[j]:
                used1[i] = True
                used2[j] = True
                matches += 1
                break
    if matches == 0:
        return 0.0
    seq1 = [s1[i] for i in range(len1) if used1[i]]
    seq2 = [s2[j] for j in range(len2) if used2[j]]
    half_transposed = sum(a != b for a, b in zip(seq1, seq2))
    transpositions = half_transposed // 2
    return (
        matches / len1 + matches / len2 + (matches - transpositions) / matches
    ) / 3.0


def naive_best_match(pw: str, entries: list[str]) -> tuple[float, int | None]:
    """Scan every entry with the reference scorer; ties keep the earliest."""
    best, best_idx = 0.0, None
    for idx, entry in enumerate(entries):
        score = reference_jaro(pw, entry)
        if score > best:
            best, best_idx = score, idx
    return best, best_idx


def random_password(rng: random.Random, lo: int = 0, hi: int = 14) -> str:
    pool = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789!@#$%"
    return "".join(rng.choice(pool) for _ in range(rng.randint(lo, hi)))


@pytest.fixture(scope="session")
def english_dict() -> FragmentDictionary:
    return builtin_dictionary("english")


@pytest.fixture(scope="session")
def indian_dict() -> FragmentDictionary:
    return builtin_dictionary("indian")


@pytest.fixture
def tiny_weak() -> Corpus:
    return Corpus(
        entries=["bunty", "Passw0rd!", "raja&Uh0", "Monkey#12"],
        label="tiny",
        language="mixed",
    )


@pytest.fixture
def write_wordlist(tmp_path):
    def _write(name: str, lines: list[str]) -> str:
        path = tmp_path / name
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return str(path)

    return _write
