"""Similarity-based password strength toolkit.

Scores string pairs with Jaro similarity, generates policy-compliant
multilingual wordlists, measures how often test passwords fall within a
similarity threshold of a weak list, and exposes the result as a meter.
"""

from .corpus import (
    CompositionPolicy,
    Corpus,
    corpus_stats,
    filter_by_policy,
    load_wordlist,
    policy_check,
    save_wordlist,
)
from .generator import (
    FragmentDictionary,
    GenerationSpec,
    builtin_dictionary,
    embeds_fragment,
    generate,
    load_fragment_dictionary,
    mix_corpora,
)
from .matcher import (
    CorpusIndex,
    EvaluationReport,
    MatchResult,
    evaluate,
    match_one,
    report_to_dict,
    reports_to_csv,
    threshold_sweep,
)
from .meter import StrengthVerdict, assess, verdict_to_dict
from .similarity import (
    MatchProfile,
    char_frequencies,
    jaro,
    jaro_upper_bound,
    jaro_upper_bound_strings,
    match_profile,
    multiset_intersection_size,
    score_from_profile,
)

__version__ = "0.1.0"

__all__ = [
    "CompositionPolicy",
    "Corpus",
    "CorpusIndex",
    "EvaluationReport",
    "FragmentDictionary",
    "GenerationSpec",
    "MatchProfile",
    "MatchResult",
    "StrengthVerdict",
    "assess",
    "builtin_dictionary",
    "char_frequencies",
    "corpus_stats",
    "embeds_fragment",
    "evaluate",
    "filter_by_policy",
    "generate",
    "jaro",
    "jaro_upper_bound",
    "jaro_upper_bound_strings",
    "load_fragment_dictionary",
    "load_wordlist",
    "match_one",
    "match_profile",
    "mix_corpora",
    "multiset_intersection_size",
    "policy_check",
    "report_to_dict",
    "reports_to_csv",
    "save_wordlist",
    "score_from_profile",
    "threshold_sweep",
    "verdict_to_dict",
]
