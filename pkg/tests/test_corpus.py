"""Wordlist IO, normalization, and composition policy tests."""

from __future__ import annotations

import random

import pytest

from pwsim import (
    CompositionPolicy,
    Corpus,
    corpus_stats,
    filter_by_policy,
    load_wordlist,
    policy_check,
    save_wordlist,
)
from conftest import random_password


def test_load_basic(write_wordlist) -> None:
    path = write_wordlist("w.txt", ["Alpha1!x", "Beta22@yz", "Gamma3#ab"])
    corpus = load_wordlist(path, label="w", language="english")
    assert corpus.entries == ["Alpha1!x", "Beta22@yz", "Gamma3#ab"]
    assert corpus.label == "w"
    assert corpus.language == "english"
    assert corpus.line_count_raw == 3
    assert corpus.skipped == 0 and corpus.deduped == 0


def test_load_skips_blank_and_whitespace_lines(tmp_path) -> None:
    # whitespace-only lines are dropped, but interior/leading whitespace in a
    # real entry is part of the password and survives
    path = tmp_path / "w.txt"
    path.write_text("one\n\n   \n\ttwo  \n", encoding="utf-8")
    corpus = load_wordlist(path)
    assert corpus.entries == ["one", "\ttwo  "]
    assert corpus.skipped == 2
    assert corpus.line_count_raw == 4


def test_load_dedupes_preserving_first(write_wordlist) -> None:
    path = write_wordlist("w.txt", ["aaa", "bbb", "aaa", "ccc", "bbb"])
    corpus = load_wordlist(path, dedupe=True)
    assert corpus.entries == ["aaa", "bbb", "ccc"]
    assert corpus.deduped == 2
    assert len(corpus) + corpus.skipped + corpus.deduped == corpus.line_count_raw


def test_load_keeps_duplicates_by_default(write_wordlist) -> None:
    path = write_wordlist("w.txt", ["aaa", "aaa"])
    assert load_wordlist(path).entries == ["aaa", "aaa"]


def test_load_survives_undecodable_bytes(tmp_path) -> None:
    path = tmp_path / "w.txt"
    path.write_bytes(b"good\n\xff\xfe broken\ngood2\n")
    corpus = load_wordlist(path)
    assert "good" in corpus.entries and "good2" in corpus.entries
    assert corpus.skipped >= 1


def test_load_applies_nfc_normalization(tmp_path) -> None:
    # e + combining acute must collapse to the precomposed form
    decomposed = "café"
    composed = "café"
    path = tmp_path / "w.txt"
    path.write_text(decomposed + "\n", encoding="utf-8")
    corpus = load_wordlist(path)
    assert corpus.entries == [composed]


def test_nfc_makes_equivalent_lines_duplicates(tmp_path) -> None:
    path = tmp_path / "w.txt"
    path.write_text("café\ncafé\n", encoding="utf-8")
    corpus = load_wordlist(path, dedupe=True)
    assert len(corpus.entries) == 1
    assert corpus.deduped == 1


def test_round_trip(tmp_path, write_wordlist) -> None:
    src = write_wordlist("in.txt", ["Kohli@123", "Sachin#45", "Virat$678"])
    corpus = load_wordlist(src, label="rt", language="indian")
    out = tmp_path / "out.txt"
    save_wordlist(corpus, out)
    again = load_wordlist(out, label="rt", language="indian")
    assert again.entries == corpus.entries


def test_missing_file_raises() -> None:
    with pytest.raises(OSError):
        load_wordlist("/nonexistent/path/words.txt")


def test_corpus_rejects_unknown_language() -> None:
    with pytest.raises(ValueError, match="language"):
        Corpus(entries=["x"], language="klingon")


def test_policy_check_compliant_example() -> None:
    assert policy_check("raja&Uh0") == []


def test_policy_check_all_letters() -> None:
    assert policy_check("aaaaaaaa") == [
        "missing_upper",
        "missing_digit",
        "missing_symbol",
    ]


def test_policy_check_too_short() -> None:
    assert policy_check("Ab1!") == ["too_short"]


def test_policy_check_too_long() -> None:
    violations = policy_check("Abcdefgh1!xx")
    assert violations == ["too_long"]


def test_policy_check_custom_bounds() -> None:
    loose = CompositionPolicy(
        min_len=1, max_len=64, require_upper=False, require_symbol=False
    )
    assert policy_check("hello1", loose) == []
    assert policy_check("HELLO1", loose) == ["missing_lower"]


def test_policy_bounds_validation() -> None:
    with pytest.raises(ValueError):
        CompositionPolicy(min_len=0)
    with pytest.raises(ValueError):
        CompositionPolicy(min_len=12, max_len=8)


def test_filter_by_policy_counts() -> None:
    corpus = Corpus(
        entries=["raja&Uh0", "aaaaaaaa", "Ab1!", "Monkey#12"], language="mixed"
    )
    kept = filter_by_policy(corpus)
    assert kept.entries == ["raja&Uh0", "Monkey#12"]
    assert kept.skipped == 2
    assert kept.line_count_raw == 4


def test_filter_is_idempotent() -> None:
    rng = random.Random(3)
    corpus = Corpus(
        entries=[random_password(rng, 1, 14) for _ in range(300)],
        language="mixed",
    )
    once = filter_by_policy(corpus)
    twice = filter_by_policy(once)
    assert twice.entries == once.entries
    assert twice.skipped == 0


def test_filter_length_only_keeps_class_violators() -> None:
    corpus = Corpus(entries=["Kohli@123", "hi", "aaaaaaaa"], language="mixed")
    kept = filter_by_policy(corpus, length_only=True)
    assert kept.entries == ["Kohli@123", "aaaaaaaa"]


def test_filter_matches_per_entry_check() -> None:
    # the filter must agree with policy_check entry by entry
    rng = random.Random(11)
    entries = [random_password(rng, 1, 14) for _ in range(500)]
    corpus = Corpus(entries=entries, language="mixed")
    expected = [pw for pw in entries if not policy_check(pw)]
    assert filter_by_policy(corpus).entries == expected


def test_corpus_stats_shapes() -> None:
    corpus = Corpus(
        entries=["raja&Uh0", "Monkey#12", "Tiger$345"],
        label="s",
        language="mixed",
    )
    stats = corpus_stats(corpus)
    assert stats["size"] == 3
    assert sum(stats["length_histogram"].values()) == 3
    assert stats["length_histogram"] == {8: 1, 9: 2}
    for rate in stats["class_coverage"].values():
        assert 0.0 <= rate <= 1.0
    assert stats["class_coverage"]["digit"] == 1.0


def test_corpus_stats_empty() -> None:
    stats = corpus_stats(Corpus(language="mixed"))
    assert stats["size"] == 0
    assert stats["length_histogram"] == {}
    assert stats["class_coverage"]["upper"] == 0.0
