"""Deterministic composition of realistic multilingual passwords.

Passwords are built from word fragments so they look like human choices
rather than random characters: one or two whole fragments fill the letter
budget (longest fits first, random letters only as a last resort), then the
required character classes are worked in according to the style: scattered
(upper/digit/symbol at random positions), appended (leading capital, digit
and symbol at the end), or digit_tail (word plus a repeated-digit run, the
common leaked shape). Every output satisfies the composition policy it was
generated under.

Reproducibility: password i of a run is derived from its own
``random.Random(f"{seed}:{i}")`` stream (string seeding hashes via SHA-512,
so streams are stable across platforms and Python versions, and parallel
generation can partition the index range without changing output). Only
integer draws are used.
"""

from __future__ import annotations

import random
import unicodedata
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .corpus import Corpus, CompositionPolicy

DIGITS = "0123456789"
SYMBOLS = "!@#$%^&*()-_=+.?"
LOWERCASE = "abcdefghijklmnopqrstuvwxyz"

MIN_FRAGMENT_LEN = 2
MAX_FRAGMENT_LEN = 8

BUILTIN_LANGUAGES = ("english", "indian")

# scattered: classes land at random positions mid-word, the shape of
# machine-suggested passwords. appended: first letter uppercased, digit and
# symbol appended, the shape humans type at creation prompts. digit_tail: a
# word plus a repeated-digit run, the shape that dominates real leaked
# lists; needs a policy without the uppercase and symbol requirements.
STYLES = ("scattered", "appended", "digit_tail")


@dataclass(frozen=True)
class FragmentDictionary:
    """A language-tagged pool of lowercase word fragments."""

    language: str
    fragments: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.fragments:
            raise ValueError(f"fragment dictionary {self.language!r} is empty")
        for frag in self.fragments:
            if not (MIN_FRAGMENT_LEN <= len(frag) <= MAX_FRAGMENT_LEN):
                raise ValueError(f"fragment {frag!r} is not 2-8 characters long")
            if not frag.isalpha() or frag != frag.lower():
                raise ValueError(f"fragment {frag!r} is not lowercase alphabetic")


@dataclass(frozen=True)
class GenerationSpec:
    """How many passwords to compose, from which languages, under which policy."""

    count: int
    seed: int = 0
    policy: CompositionPolicy = field(default_factory=CompositionPolicy)
    languages: dict[str, float] = field(default_factory=lambda: {"english": 1.0})
    style: str = "scattered"

    def __post_init__(self) -> None:
        if self.count < 1:
            raise ValueError(f"count must be positive, got {self.count}")
        if not self.languages:
            raise ValueError("languages must not be empty")
        total = 0.0
        for tag, weight in self.languages.items():
            if not (0.0 <= weight <= 1.0):
                raise ValueError(f"weight for {tag!r} must be in [0, 1], got {weight}")
            total += weight
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"language weights must sum to 1, got {total}")
        if self.style not in STYLES:
            raise ValueError(f"style must be one of {STYLES}, got {self.style!r}")


def load_fragment_dictionary(path: str | Path, language: str | None = None) -> FragmentDictionary:
    """Load a fragment file: one fragment per line, '# language: tag' header allowed."""
    path = Path(path)
    fragments: list[str] = []
    for line in path.read_text(encoding="utf-8").splitlines():
        line = unicodedata.normalize("NFC", line.strip())
        if not line:
            continue
        if line.startswith("#"):
            body = line.lstrip("#").strip()
            if body.startswith("language:") and language is None:
                language = body.split(":", 1)[1].strip()
            continue
        fragments.append(line)
    return FragmentDictionary(language or "unknown", tuple(fragments))


def builtin_dictionary(language: str) -> FragmentDictionary:
    """Load one of the dictionaries bundled with the package."""
    if language not in BUILTIN_LANGUAGES:
        raise ValueError(
            f"no builtin dictionary for {language!r}; available: {', '.join(BUILTIN_LANGUAGES)}"
        )
    ref = resources.files("pwsim.data") / f"{language}.txt"
    with resources.as_file(ref) as path:
        return load_fragment_dictionary(path, language)


def _integer_weights(languages: dict[str, float]) -> list[tuple[str, int]]:
    # Scale config floats to integers once so the sampling path stays integral.
    return [(tag, max(0, round(w * 10**9))) for tag, w in languages.items()]


def _weighted_language(rng: random.Random, weights: list[tuple[str, int]]) -> str:
    total = sum(w for _, w in weights)
    r = rng.randrange(total)
    acc = 0
    for tag, w in weights:
        acc += w
        if r < acc:
            return tag
    return weights[-1][0]


class _FragmentPools:
    """Per-dictionary fragment lists bucketed by maximum length."""

    def __init__(self, dicts: dict[str, FragmentDictionary]):
        self.by_cap: dict[str, dict[int, list[str]]] = {}
        for tag, d in dicts.items():
            caps: dict[int, list[str]] = {}
            for cap in range(MIN_FRAGMENT_LEN, MAX_FRAGMENT_LEN + 1):
                caps[cap] = [f for f in d.fragments if len(f) <= cap]
            self.by_cap[tag] = caps

    def pick_between(self, rng: random.Random, language: str,
                     floor: int, cap: int) -> str | None:
        if cap < MIN_FRAGMENT_LEN:
            return None
        pool = [f for f in self.by_cap[language][min(cap, MAX_FRAGMENT_LEN)]
                if len(f) >= floor]
        if not pool:
            return None
        return pool[rng.randrange(len(pool))]


def _fill_letters(
    rng: random.Random,
    pools: _FragmentPools,
    weights: list[tuple[str, int]],
    letters_target: int,
) -> str:
    """Fill the letter budget with one or two whole fragments, longest first.

    Whole-fragment fitting keeps every password anchored to a dictionary
    word; the two-fragment case may span two languages under a mixed spec.
    Random letters appear only when no fragment fits the remainder.
    """
    lang1 = _weighted_language(rng, weights)
    frag1 = None
    for floor in range(letters_target, MIN_FRAGMENT_LEN - 1, -1):
        frag1 = pools.pick_between(rng, lang1, floor, letters_target)
        if frag1 is not None:
            break
    if frag1 is None:
        raise ValueError(
            f"no {lang1} fragment fits in {letters_target} letters; "
            "the policy leaves too little room"
        )
    letters = frag1
    remainder = letters_target - len(letters)
    if remainder >= MIN_FRAGMENT_LEN:
        lang2 = _weighted_language(rng, weights)
        for floor in range(remainder, MIN_FRAGMENT_LEN - 1, -1):
            frag2 = pools.pick_between(rng, lang2, floor, remainder)
            if frag2 is not None:
                letters += frag2
                break
    while len(letters) < letters_target:
        letters += LOWERCASE[rng.randrange(26)]
    return letters


def _compose_scattered(
    rng: random.Random,
    pools: _FragmentPools,
    weights: list[tuple[str, int]],
    policy: CompositionPolicy,
) -> str:
    reserved = int(policy.require_digit) + int(policy.require_symbol)
    low = max(policy.min_len, reserved + MIN_FRAGMENT_LEN)
    target = rng.randrange(low, policy.max_len + 1)
    letters = _fill_letters(rng, pools, weights, target - reserved)

    chars = list(letters)
    if policy.require_upper:
        idx = rng.randrange(len(chars))
        cap = chars[idx].upper()
        if len(cap) != 1 or not cap.isupper():
            cap = LOWERCASE[rng.randrange(26)].upper()
        chars[idx] = cap
    if policy.require_digit:
        digit = DIGITS[rng.randrange(len(DIGITS))]
        chars.insert(rng.randrange(len(chars) + 1), digit)
    if policy.require_symbol:
        symbol = SYMBOLS[rng.randrange(len(SYMBOLS))]
        chars.insert(rng.randrange(len(chars) + 1), symbol)
    return "".join(chars)


def _compose_appended(
    rng: random.Random,
    pools: _FragmentPools,
    weights: list[tuple[str, int]],
    policy: CompositionPolicy,
) -> str:
    reserved = int(policy.require_digit) + int(policy.require_symbol)
    low = max(policy.min_len, reserved + MIN_FRAGMENT_LEN)
    target = rng.randrange(low, policy.max_len + 1)
    letters = _fill_letters(rng, pools, weights, target - reserved)

    chars = list(letters)
    if policy.require_upper:
        cap = chars[0].upper()
        if len(cap) != 1 or not cap.isupper():
            cap = LOWERCASE[rng.randrange(26)].upper()
        chars[0] = cap
    if policy.require_digit:
        chars.append(DIGITS[rng.randrange(len(DIGITS))])
    if policy.require_symbol:
        chars.append(SYMBOLS[rng.randrange(len(SYMBOLS))])
    return "".join(chars)


def _compose_digit_tail(
    rng: random.Random,
    pools: _FragmentPools,
    weights: list[tuple[str, int]],
    policy: CompositionPolicy,
) -> str:
    low = max(policy.min_len, MIN_FRAGMENT_LEN + 1)
    target = rng.randrange(low, policy.max_len + 1)
    lang = _weighted_language(rng, weights)
    cap = min(target - 1, MAX_FRAGMENT_LEN)
    # Favor long words so the digit run stays short, like real leaks.
    frag = pools.pick_between(rng, lang, cap - 2, cap)
    if frag is None:
        frag = pools.pick_between(rng, lang, MIN_FRAGMENT_LEN, cap)
    if frag is None:
        raise ValueError(
            f"policy too tight: no {lang} fragment fits in {cap} letters"
        )
    digits = str(rng.randrange(10)) * (target - len(frag))
    if rng.randrange(2) == 0:
        return digits + frag
    return frag + digits


_COMPOSERS = {
    "scattered": _compose_scattered,
    "appended": _compose_appended,
    "digit_tail": _compose_digit_tail,
}


def generate(
    dicts: list[FragmentDictionary] | dict[str, FragmentDictionary],
    spec: GenerationSpec,
    label: str = "",
) -> Corpus:
    """Compose exactly spec.count policy-compliant passwords.

    Pure in (dicts, spec): the same inputs produce the same corpus in the
    same order.
    """
    if isinstance(dicts, dict):
        by_lang = dict(dicts)
    else:
        by_lang = {d.language: d for d in dicts}
    missing = [tag for tag in spec.languages if tag not in by_lang]
    if missing:
        raise ValueError(f"no dictionary for language(s): {', '.join(missing)}")
    if spec.style == "digit_tail":
        if spec.policy.require_upper or spec.policy.require_symbol:
            raise ValueError(
                "digit_tail style produces lowercase-plus-digits passwords; "
                "use a policy without upper/symbol requirements"
            )
        if spec.policy.max_len < MIN_FRAGMENT_LEN + 1:
            raise ValueError(
                f"policy max_len={spec.policy.max_len} cannot hold a fragment "
                "plus a digit"
            )
    else:
        reserved = int(spec.policy.require_digit) + int(spec.policy.require_symbol)
        if spec.policy.max_len < reserved + MIN_FRAGMENT_LEN:
            raise ValueError(
                f"policy max_len={spec.policy.max_len} cannot hold a fragment plus "
                f"{reserved} required non-letter character(s)"
            )
    compose = _COMPOSERS[spec.style]

    pools = _FragmentPools({tag: by_lang[tag] for tag in spec.languages})
    weights = _integer_weights(spec.languages)
    entries = [
        compose(random.Random(f"{spec.seed}:{i}"), pools, weights, spec.policy)
        for i in range(spec.count)
    ]
    language = next(iter(spec.languages)) if len(spec.languages) == 1 else "mixed"
    return Corpus(
        entries=entries,
        label=label or f"generated-{language}",
        language=language,
        source=f"generator seed={spec.seed}",
        line_count_raw=len(entries),
    )


def embeds_fragment(pw: str, fragments: tuple[str, ...] | list[str]) -> bool:
    """True if the password contains a whole fragment once case and the
    inserted digits/symbols are ignored."""
    letters = "".join(c for c in pw.lower() if c.isalpha())
    return any(frag in letters for frag in fragments)


def _largest_remainder(total: int, proportions: list[float]) -> list[int]:
    shares = [total * p for p in proportions]
    counts = [int(s) for s in shares]
    leftover = total - sum(counts)
    order = sorted(range(len(shares)), key=lambda i: (counts[i] - shares[i], i))
    for i in order[:leftover]:
        counts[i] += 1
    return counts


def mix_corpora(parts: list[tuple[Corpus, float]], seed: int = 0) -> Corpus:
    """Blend corpora so per-source counts follow the given proportions.

    The output size is the largest total at which every proportion lands on
    a whole number of entries without exceeding its source; if no such total
    exists the largest feasible largest-remainder allocation is used. Entry
    selection and the final interleave are deterministic in the seed.
    """
    if not parts:
        raise ValueError("parts must not be empty")
    proportions = [p for _, p in parts]
    if abs(sum(proportions) - 1.0) > 1e-9:
        raise ValueError(f"proportions must sum to 1, got {sum(proportions)}")
    for corpus_part, p in parts:
        if p < 0:
            raise ValueError(f"negative proportion {p}")
        if p > 0 and not corpus_part.entries:
            raise ValueError(
                f"corpus {corpus_part.label!r} is empty but has proportion {p}"
            )
    sizes = [len(c) for c, _ in parts]
    cap = sum(sizes)

    counts: list[int] | None = None
    for total in range(cap, 0, -1):
        ok = True
        exact = []
        for p, size in zip(proportions, sizes):
            share = total * p
            rounded = round(share)
            if abs(share - rounded) > 1e-6 or rounded > size:
                ok = False
                break
            exact.append(rounded)
        if ok:
            counts = exact
            break
    if counts is None:
        for total in range(cap, 0, -1):
            trial = _largest_remainder(total, proportions)
            if all(c <= size for c, size in zip(trial, sizes)):
                counts = trial
                break
    if counts is None:
        raise ValueError("no feasible mix for the given proportions")

    rng = random.Random(f"{seed}:mix")
    selected: list[str] = []
    for (corpus_part, _), take in zip(parts, counts):
        idx = sorted(rng.sample(range(len(corpus_part.entries)), take))
        selected.extend(corpus_part.entries[i] for i in idx)
    rng.shuffle(selected)

    languages = {c.language for c, _ in parts}
    return Corpus(
        entries=selected,
        label="+".join(c.label for c, _ in parts),
        language=languages.pop() if len(languages) == 1 else "mixed",
        source="mix seed=%d" % seed,
        line_count_raw=len(selected),
    )
