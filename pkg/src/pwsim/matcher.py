"""Threshold similarity search of a test corpus against a weak corpus.

A test password matches when some weak entry has Jaro similarity >= the
threshold (the boundary is inclusive; the comparison direction does not
matter because the score is symmetric). Matching accuracy is the matched
fraction of the test corpus.

The fast path prunes with a character-frequency upper bound evaluated for
the whole weak corpus at once; pruning can never change which passwords
match or, in exhaustive mode, the best-scoring entry, because the bound is
sound. A no-pruning path exists both as a baseline and as the comparison
counter reference.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .corpus import Corpus
from .similarity import jaro


@dataclass(frozen=True)
class MatchResult:
    """Outcome of scanning one test password against a weak corpus."""

    test_password: str
    matched: bool
    best_score: float
    best_match: str | None
    comparisons: int
    match_index: int | None = None


@dataclass(frozen=True)
class EvaluationReport:
    """Corpus-level matching accuracy at one threshold."""

    matched_count: int
    test_count: int
    accuracy: float
    threshold: float
    per_source: dict[str, int] | None
    elapsed_seconds: float
    comparisons: int


class CorpusIndex:
    """Character-frequency index of a weak corpus for pruned scans."""

    def __init__(self, entries: Sequence[str]):
        self.entries = list(entries)
        alphabet: dict[str, int] = {}
        for pw in self.entries:
            for ch in pw:
                if ch not in alphabet:
                    alphabet[ch] = len(alphabet)
        self.alphabet = alphabet
        n, width = len(self.entries), max(len(alphabet), 1)
        counts = np.zeros((n, width), dtype=np.uint16)
        lengths = np.zeros(n, dtype=np.int64)
        for row, pw in enumerate(self.entries):
            lengths[row] = len(pw)
            for ch in pw:
                counts[row, alphabet[ch]] += 1
        self.counts = counts
        self.lengths = lengths

    def bounds(self, pw: str) -> np.ndarray:
        """Jaro upper bound of pw against every indexed entry."""
        len_q = len(pw)
        if len_q == 0:
            return np.where(self.lengths == 0, 1.0, 0.0)
        query = np.zeros(self.counts.shape[1], dtype=np.uint16)
        for ch in pw:
            col = self.alphabet.get(ch)
            if col is not None:
                query[col] += 1
        m_max = np.minimum(self.counts, query).sum(axis=1)
        out = np.zeros(len(self.entries), dtype=np.float64)
        pos = m_max > 0
        if pos.any():
            mm = m_max[pos].astype(np.float64)
            out[pos] = (mm / len_q + mm / self.lengths[pos] + 1.0) / 3.0
        return out


def _check_threshold(threshold: float) -> None:
    if not (0.0 <= threshold <= 1.0):
        raise ValueError(f"threshold must be in [0, 1], got {threshold}")


def match_one(
    pw: str,
    weak: Corpus | Sequence[str],
    threshold: float = 0.5,
    exhaustive: bool = False,
    *,
    index: CorpusIndex | None = None,
    prune: bool = True,
) -> MatchResult:
    """Scan one password against the weak corpus.

    Non-exhaustive scans stop at the first entry scoring >= threshold, so
    best_score reflects that entry. Exhaustive scans return the global best
    with ties broken by earliest corpus position.
    """
    _check_threshold(threshold)
    entries = index.entries if index is not None else (
        weak.entries if isinstance(weak, Corpus) else list(weak)
    )
    if not entries:
        raise ValueError("weak corpus is empty: no reference set to match against")

    bound_list: list[float] | None = None
    if prune:
        if index is None:
            index = CorpusIndex(entries)
        bound_list = index.bounds(pw).tolist()

    comparisons = 0
    best_score = -1.0
    best_match: str | None = None
    best_index: int | None = None

    if exhaustive:
        for j, entry in enumerate(entries):
            if bound_list is not None and bound_list[j] <= best_score:
                continue
            score = jaro(pw, entry)
            comparisons += 1
            if score > best_score:
                best_score = score
                best_match = entry
                best_index = j
        return MatchResult(pw, best_score >= threshold, best_score, best_match,
                           comparisons, best_index)

    for j, entry in enumerate(entries):
        if bound_list is not None and bound_list[j] < threshold:
            continue
        score = jaro(pw, entry)
        comparisons += 1
        if score > best_score:
            best_score = score
            best_match = entry
            best_index = j
        if score >= threshold:
            return MatchResult(pw, True, score, entry, comparisons, j)
    if comparisons == 0:
        return MatchResult(pw, False, 0.0, None, 0, None)
    return MatchResult(pw, False, best_score, best_match, comparisons, best_index)


def _as_parts(weak: Corpus | Sequence[Corpus]) -> list[Corpus]:
    if isinstance(weak, Corpus):
        return [weak]
    parts = list(weak)
    if not parts or not all(isinstance(p, Corpus) for p in parts):
        raise ValueError("weak must be a Corpus or a non-empty sequence of Corpus")
    return parts


_worker_state: dict = {}


def _init_worker(entries: list[str], threshold: float, exhaustive: bool, prune: bool) -> None:
    _worker_state["entries"] = entries
    _worker_state["index"] = CorpusIndex(entries) if prune else None
    _worker_state["threshold"] = threshold
    _worker_state["exhaustive"] = exhaustive
    _worker_state["prune"] = prune


def _match_chunk(chunk: list[str]) -> tuple[int, int, list[int]]:
    matched = 0
    comparisons = 0
    hit_indices: list[int] = []
    for pw in chunk:
        result = match_one(
            pw,
            _worker_state["entries"],
            _worker_state["threshold"],
            _worker_state["exhaustive"],
            index=_worker_state["index"],
            prune=_worker_state["prune"],
        )
        comparisons += result.comparisons
        if result.matched:
            matched += 1
            hit_indices.append(result.match_index)
    return matched, comparisons, hit_indices


def evaluate(
    test: Corpus,
    weak: Corpus | Sequence[Corpus],
    threshold: float = 0.5,
    *,
    exhaustive: bool = False,
    prune: bool = True,
    workers: int = 1,
    index: CorpusIndex | None = None,
) -> EvaluationReport:
    """Match every test entry against the weak corpus and report accuracy.

    When weak is a sequence of corpora, matches are also broken down by each
    part's label. The result does not depend on worker count.
    """
    _check_threshold(threshold)
    if not test.entries:
        raise ValueError("test corpus is empty")
    parts = _as_parts(weak)
    entries: list[str] = []
    spans: list[tuple[str, int, int]] = []
    for part in parts:
        spans.append((part.label, len(entries), len(entries) + len(part.entries)))
        entries.extend(part.entries)
    if not entries:
        raise ValueError("weak corpus is empty: no reference set to match against")

    start = time.perf_counter()
    if prune and index is None:
        index = CorpusIndex(entries)

    matched = 0
    comparisons = 0
    hit_indices: list[int] = []
    if workers > 1:
        chunks = [test.entries[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(
            max_workers=workers,
            initializer=_init_worker,
            initargs=(entries, threshold, exhaustive, prune),
        ) as pool:
            for m_part, c_part, hits in pool.map(_match_chunk, chunks):
                matched += m_part
                comparisons += c_part
                hit_indices.extend(hits)
    else:
        for pw in test.entries:
            result = match_one(pw, entries, threshold, exhaustive,
                               index=index, prune=prune)
            comparisons += result.comparisons
            if result.matched:
                matched += 1
                hit_indices.append(result.match_index)
    elapsed = time.perf_counter() - start

    per_source: dict[str, int] | None = None
    if len(parts) > 1:
        per_source = {label: 0 for label, _, _ in spans}
        for hit in hit_indices:
            for label, lo, hi in spans:
                if lo <= hit < hi:
                    per_source[label] += 1
                    break
    return EvaluationReport(
        matched_count=matched,
        test_count=len(test.entries),
        accuracy=matched / len(test.entries),
        threshold=threshold,
        per_source=per_source,
        elapsed_seconds=elapsed,
        comparisons=comparisons,
    )


def threshold_sweep(
    test: Corpus,
    weak: Corpus | Sequence[Corpus],
    thresholds: Sequence[float],
    *,
    exhaustive: bool = False,
    prune: bool = True,
    workers: int = 1,
) -> list[EvaluationReport]:
    """Evaluate at each threshold of an ascending list, reusing one index."""
    if list(thresholds) != sorted(thresholds):
        raise ValueError("thresholds must be ascending")
    for t in thresholds:
        _check_threshold(t)
    parts = _as_parts(weak)
    all_entries = [e for p in parts for e in p.entries]
    shared = CorpusIndex(all_entries) if prune else None
    return [
        evaluate(test, parts if len(parts) > 1 else parts[0], t,
                 exhaustive=exhaustive, prune=prune, workers=workers, index=shared)
        for t in thresholds
    ]


def report_to_dict(report: EvaluationReport) -> dict:
    """JSON-ready view of a report; accuracy also as a 2-decimal percentage."""
    return {
        "matched_count": report.matched_count,
        "test_count": report.test_count,
        "accuracy": report.accuracy,
        "accuracy_pct": f"{report.accuracy * 100:.2f}",
        "threshold": report.threshold,
        "per_source": report.per_source,
        "elapsed_seconds": report.elapsed_seconds,
        "comparisons": report.comparisons,
    }


CSV_FIELDS = (
    "matched_count",
    "test_count",
    "accuracy",
    "accuracy_pct",
    "threshold",
    "per_source",
    "elapsed_seconds",
    "comparisons",
)


def reports_to_csv(reports: Sequence[EvaluationReport]) -> str:
    """Render reports as CSV, one row per report."""
    import csv
    import io

    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS)
    writer.writeheader()
    for report in reports:
        row = report_to_dict(report)
        if row["per_source"] is not None:
            row["per_source"] = ";".join(
                f"{k}={v}" for k, v in row["per_source"].items()
            )
        else:
            row["per_source"] = ""
        writer.writerow(row)
    return buf.getvalue()
