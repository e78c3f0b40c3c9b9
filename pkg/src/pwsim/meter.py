"""Password strength verdicts from weak-list similarity plus policy checks.

A candidate is weak when it sits within the similarity threshold of any
entry in any configured weak list; being merely policy-deficient is a
separate, lesser verdict. The nearest weak entry is always reported so a
caller can explain the verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .corpus import CompositionPolicy, Corpus, policy_check
from .matcher import CorpusIndex, match_one

LABELS = ("weak_similar", "weak_policy", "acceptable")


@dataclass(frozen=True)
class StrengthVerdict:
    """Assessment of one candidate password."""

    label: str
    max_similarity: float
    nearest_weak: str
    nearest_source: str
    violations: tuple[str, ...]
    threshold: float


def assess(
    candidate: str,
    weak_sets: Sequence[Corpus],
    threshold: float = 0.5,
    policy: CompositionPolicy | None = None,
    *,
    indexes: Sequence[CorpusIndex | None] | None = None,
) -> StrengthVerdict:
    """Rate a candidate against weak lists, then against the policy.

    Similarity dominates: a candidate near a weak entry is weak_similar even
    if it satisfies every policy rule. Ties across weak sets keep the
    earliest set; ties inside a set keep the earliest entry. Prebuilt
    indexes, aligned with weak_sets, make repeated calls cheap.
    """
    if not candidate:
        raise ValueError("candidate password is empty")
    if not (0.0 <= threshold <= 1.0):
        raise ValueError(f"threshold must be in [0, 1], got {threshold}")
    weak_sets = list(weak_sets)
    if not weak_sets or all(not c.entries for c in weak_sets):
        raise ValueError("no weak entries configured: nothing to assess against")
    if indexes is not None and len(indexes) != len(weak_sets):
        raise ValueError("indexes must align one-to-one with weak_sets")

    best_score = -1.0
    nearest_weak = ""
    nearest_source = ""
    for pos, corpus in enumerate(weak_sets):
        if not corpus.entries:
            continue
        index = indexes[pos] if indexes is not None else None
        result = match_one(candidate, corpus, threshold, exhaustive=True,
                           index=index)
        if result.best_score > best_score:
            best_score = result.best_score
            nearest_weak = result.best_match
            nearest_source = corpus.label or f"weak_set_{pos}"

    violations = tuple(policy_check(candidate, policy))
    if best_score >= threshold:
        label = "weak_similar"
    elif violations:
        label = "weak_policy"
    else:
        label = "acceptable"
    return StrengthVerdict(
        label=label,
        max_similarity=best_score,
        nearest_weak=nearest_weak,
        nearest_source=nearest_source,
        violations=violations,
        threshold=threshold,
    )


def verdict_to_dict(verdict: StrengthVerdict) -> dict:
    """JSON-ready view of a verdict."""
    return {
        "label": verdict.label,
        "max_similarity": verdict.max_similarity,
        "nearest_weak": verdict.nearest_weak,
        "nearest_source": verdict.nearest_source,
        "violations": list(verdict.violations),
        "threshold": verdict.threshold,
    }
