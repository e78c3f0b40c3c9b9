"""Wordlist loading, composition-policy checks, filtering, and statistics.

Wordlist files are UTF-8 text, one password per line, LF or CRLF. Entries are
NFC-normalized on load and lengths everywhere are Unicode code point counts.
"""

from __future__ import annotations

import unicodedata
import warnings
from dataclasses import dataclass, field, replace
from pathlib import Path

LANGUAGES = ("english", "indian", "mixed", "unknown")

VIOLATION_ORDER = (
    "too_short",
    "too_long",
    "missing_upper",
    "missing_lower",
    "missing_digit",
    "missing_symbol",
)


@dataclass(frozen=True)
class CompositionPolicy:
    """Length bounds plus required character classes."""

    min_len: int = 8
    max_len: int = 10
    require_upper: bool = True
    require_lower: bool = True
    require_digit: bool = True
    require_symbol: bool = True

    def __post_init__(self) -> None:
        if not (1 <= self.min_len <= self.max_len):
            raise ValueError(
                f"invalid length bounds: min_len={self.min_len}, max_len={self.max_len}"
            )


@dataclass
class Corpus:
    """An ordered, labeled password list with provenance counters.

    line_count_raw is the number of lines read from the source; skipped counts
    lines dropped while decoding or because they were empty, and deduped counts
    duplicate lines removed, so entries + skipped + deduped == line_count_raw
    for loaded corpora.
    """

    entries: list[str] = field(default_factory=list)
    label: str = ""
    language: str = "unknown"
    source: str = ""
    line_count_raw: int = 0
    skipped: int = 0
    deduped: int = 0

    def __post_init__(self) -> None:
        if self.language not in LANGUAGES:
            raise ValueError(f"unknown language tag: {self.language!r}")

    def __len__(self) -> int:
        return len(self.entries)


def load_wordlist(
    path: str | Path,
    label: str = "",
    language: str = "unknown",
    dedupe: bool = False,
) -> Corpus:
    """Load a wordlist file into a Corpus.

    One entry per nonempty line, NFC-normalized, order preserved. Lines that
    do not decode as UTF-8 and whitespace-only lines are skipped and counted.
    With dedupe=True repeated entries are dropped (first occurrence kept).
    """
    path = Path(path)
    raw = path.read_bytes()
    entries: list[str] = []
    seen: set[str] = set()
    skipped = 0
    deduped = 0
    lines = raw.splitlines()
    for line in lines:
        try:
            text = line.decode("utf-8")
        except UnicodeDecodeError:
            skipped += 1
            continue
        text = unicodedata.normalize("NFC", text)
        if not text.strip():
            skipped += 1
            continue
        if dedupe:
            if text in seen:
                deduped += 1
                continue
            seen.add(text)
        entries.append(text)
    if not entries:
        warnings.warn(f"wordlist {path} yielded an empty corpus", stacklevel=2)
    return Corpus(
        entries=entries,
        label=label or path.stem,
        language=language,
        source=str(path),
        line_count_raw=len(lines),
        skipped=skipped,
        deduped=deduped,
    )


def save_wordlist(corpus: Corpus, path: str | Path) -> None:
    """Write a corpus back out, one entry per line, LF line endings."""
    path = Path(path)
    body = "\n".join(corpus.entries)
    if corpus.entries:
        body += "\n"
    path.write_bytes(body.encode("utf-8"))


def _is_symbol(ch: str) -> bool:
    # Any scalar that is neither a letter nor a digit nor whitespace.
    return not (ch.isalpha() or ch.isdigit() or ch.isspace())


def policy_check(pw: str, policy: CompositionPolicy | None = None) -> list[str]:
    """Return the list of policy clauses the password violates (empty = ok)."""
    if policy is None:
        policy = CompositionPolicy()
    n = len(pw)
    violations = []
    if n < policy.min_len:
        violations.append("too_short")
    if n > policy.max_len:
        violations.append("too_long")
    if policy.require_upper and not any(c.isupper() for c in pw):
        violations.append("missing_upper")
    if policy.require_lower and not any(c.islower() for c in pw):
        violations.append("missing_lower")
    if policy.require_digit and not any(c.isdigit() for c in pw):
        violations.append("missing_digit")
    if policy.require_symbol and not any(_is_symbol(c) for c in pw):
        violations.append("missing_symbol")
    return violations


def filter_by_policy(
    corpus: Corpus, policy: CompositionPolicy | None = None, length_only: bool = False
) -> Corpus:
    """Keep only policy-compliant entries, preserving order.

    With length_only=True just the length bounds are enforced, matching the
    looser filtering applied to test sets. Idempotent.
    """
    if policy is None:
        policy = CompositionPolicy()
    if length_only:
        policy = replace(
            policy,
            require_upper=False,
            require_lower=False,
            require_digit=False,
            require_symbol=False,
        )
    kept = [pw for pw in corpus.entries if not policy_check(pw, policy)]
    return Corpus(
        entries=kept,
        label=corpus.label,
        language=corpus.language,
        source=corpus.source,
        line_count_raw=len(corpus.entries),
        skipped=len(corpus.entries) - len(kept),
        deduped=0,
    )


def corpus_stats(corpus: Corpus) -> dict:
    """Deterministic summary: size, length histogram, class coverage rates."""
    n = len(corpus.entries)
    histogram: dict[int, int] = {}
    counts = {"upper": 0, "lower": 0, "digit": 0, "symbol": 0}
    for pw in corpus.entries:
        length = len(pw)
        histogram[length] = histogram.get(length, 0) + 1
        if any(c.isupper() for c in pw):
            counts["upper"] += 1
        if any(c.islower() for c in pw):
            counts["lower"] += 1
        if any(c.isdigit() for c in pw):
            counts["digit"] += 1
        if any(_is_symbol(c) for c in pw):
            counts["symbol"] += 1
    coverage = {k: (v / n if n else 0.0) for k, v in counts.items()}
    return {
        "label": corpus.label,
        "language": corpus.language,
        "size": n,
        "length_histogram": dict(sorted(histogram.items())),
        "class_coverage": coverage,
        "line_count_raw": corpus.line_count_raw,
        "skipped": corpus.skipped,
        "deduped": corpus.deduped,
    }
