"""Scorer unit tests: pinned goldens, edge cases, and property checks."""

from __future__ import annotations

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pwsim import (
    char_frequencies,
    jaro,
    jaro_upper_bound,
    jaro_upper_bound_strings,
    match_profile,
    multiset_intersection_size,
    score_from_profile,
)
from conftest import random_password, reference_jaro

text = st.text(
    alphabet=st.characters(min_codepoint=33, max_codepoint=126), max_size=16
)


GOLDEN = [
    ("Brian", "Jesus", 0.0),
    ("Thorkel", "Thorgier", 0.7797619047619048),
    ("bunty", "bunti", 0.8666666666666667),
    ("Dinsdale", "D", 0.7083333333333334),
    ("apple", "apple", 1.0),
]


@pytest.mark.parametrize("s1, s2, expected", GOLDEN)
def test_known_pairs(s1: str, s2: str, expected: float) -> None:
    assert jaro(s1, s2) == pytest.approx(expected, abs=1e-12)


def test_martha_profile() -> None:
    # classic worked example: six matched characters, one transposition
    prof = match_profile("MARTHA", "MARHTA")
    assert prof.matches == 6
    assert prof.transpositions == 1
    assert score_from_profile(prof) == pytest.approx(0.9444444444444445)


def test_empty_inputs() -> None:
    assert jaro("", "") == 1.0
    assert jaro("", "abc") == 0.0
    assert jaro("abc", "") == 0.0


def test_case_sensitive() -> None:
    assert jaro("abc", "abc") == 1.0
    assert jaro("ABC", "abc") == 0.0


def test_window_floor_never_negative() -> None:
    # max(len) <= 3 drives the raw window below zero; only same-position
    # characters may pair afterwards
    assert jaro("ab", "ba") == 0.0
    assert jaro("ab", "ab") == 1.0
    assert jaro("a", "a") == 1.0


def test_single_char_disjoint() -> None:
    assert jaro("a", "b") == 0.0


@given(text, text)
def test_matches_reference_implementation(s1: str, s2: str) -> None:
    assert jaro(s1, s2) == pytest.approx(reference_jaro(s1, s2), abs=1e-12)


@given(text, text)
def test_range(s1: str, s2: str) -> None:
    assert 0.0 <= jaro(s1, s2) <= 1.0


@given(text, text)
def test_symmetry(s1: str, s2: str) -> None:
    assert jaro(s1, s2) == pytest.approx(jaro(s2, s1), abs=1e-12)


@given(text)
def test_identity(s: str) -> None:
    assert jaro(s, s) == 1.0


@given(text, text)
def test_score_one_implies_equal(s1: str, s2: str) -> None:
    if jaro(s1, s2) == 1.0:
        assert s1 == s2


@given(st.text(alphabet="abc", min_size=1), st.text(alphabet="xyz", min_size=1))
def test_disjoint_alphabets_score_zero(s1: str, s2: str) -> None:
    assert jaro(s1, s2) == 0.0


@given(text, text)
def test_upper_bound_is_sound(s1: str, s2: str) -> None:
    bound = jaro_upper_bound_strings(s1, s2)
    assert jaro(s1, s2) <= bound + 1e-12


@given(text, text)
def test_profile_counts_are_consistent(s1: str, s2: str) -> None:
    prof = match_profile(s1, s2)
    assert prof.len1 == len(s1) and prof.len2 == len(s2)
    assert 0 <= prof.matches <= min(prof.len1, prof.len2)
    assert 0 <= prof.transpositions <= prof.matches // 2
    assert score_from_profile(prof) == pytest.approx(jaro(s1, s2), abs=1e-12)


def test_bound_multiset_intersection() -> None:
    f1 = char_frequencies("aabbc")
    f2 = char_frequencies("abccc")
    assert multiset_intersection_size(f1, f2) == 3  # a, b, one c


def test_bound_empty_cases() -> None:
    assert jaro_upper_bound_strings("", "") == 1.0
    assert jaro_upper_bound_strings("", "abc") == 0.0
    assert jaro_upper_bound(char_frequencies("abc"), 3, char_frequencies(""), 0) == 0.0


@settings(max_examples=300)
@given(text, text)
def test_bound_string_and_precomputed_forms_agree(s1: str, s2: str) -> None:
    via_strings = jaro_upper_bound_strings(s1, s2)
    via_parts = jaro_upper_bound(
        char_frequencies(s1), len(s1), char_frequencies(s2), len(s2)
    )
    assert via_strings == via_parts


def test_randomized_sweep_against_reference() -> None:
    rng = random.Random(7)
    for _ in range(2000):
        a, b = random_password(rng), random_password(rng)
        got, want = jaro(a, b), reference_jaro(a, b)
        assert math.isclose(got, want, abs_tol=1e-12), (a, b, got, want)
