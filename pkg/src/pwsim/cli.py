"""Command-line front end.

Exit codes: 0 success, 2 usage error (argparse), 1 runtime error. Data goes
to stdout, diagnostics to stderr, so output can be piped into files or
other tools.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

from .corpus import (
    CompositionPolicy,
    Corpus,
    corpus_stats,
    filter_by_policy,
    load_wordlist,
)
from .generator import (
    BUILTIN_LANGUAGES,
    FragmentDictionary,
    GenerationSpec,
    builtin_dictionary,
    load_fragment_dictionary,
    generate,
    mix_corpora,
)
from .matcher import (
    EvaluationReport,
    evaluate,
    report_to_dict,
    reports_to_csv,
    threshold_sweep,
)
from .meter import assess, verdict_to_dict
from .service import ServiceConfig, serve_forever


def _policy_from_args(args: argparse.Namespace) -> CompositionPolicy:
    return CompositionPolicy(
        min_len=args.min_len,
        max_len=args.max_len,
        require_upper=not args.no_require_upper,
        require_lower=not args.no_require_lower,
        require_digit=not args.no_require_digit,
        require_symbol=not args.no_require_symbol,
    )


def _add_policy_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--min-len", type=int, default=8)
    parser.add_argument("--max-len", type=int, default=10)
    parser.add_argument("--no-require-upper", action="store_true")
    parser.add_argument("--no-require-lower", action="store_true")
    parser.add_argument("--no-require-digit", action="store_true")
    parser.add_argument("--no-require-symbol", action="store_true")


def _add_format_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("text", "json", "csv"),
                        default="text")


def _threshold_type(raw: str) -> float:
    value = float(raw)
    if not (0.0 <= value <= 1.0):
        raise argparse.ArgumentTypeError(f"threshold must be in [0, 1], got {raw}")
    return value


def _parse_languages(raw: str) -> dict[str, float]:
    """english | english:0.5,indian:0.5 | english,indian (equal weights)."""
    parts = [p.strip() for p in raw.split(",") if p.strip()]
    if not parts:
        raise ValueError("empty --lang value")
    if any(":" in p for p in parts):
        weights = {}
        for p in parts:
            tag, _, w = p.partition(":")
            weights[tag.strip()] = float(w)
        return weights
    return {p: 1.0 / len(parts) for p in parts}


def _load_dictionaries(args: argparse.Namespace,
                       needed: set[str]) -> list[FragmentDictionary]:
    dicts = [load_fragment_dictionary(p) for p in (args.dict or [])]
    have = {d.language for d in dicts}
    for tag in sorted(needed - have):
        if tag in BUILTIN_LANGUAGES:
            dicts.append(builtin_dictionary(tag))
    return dicts


def _emit_wordlist(entries: list[str], out_path: str | None) -> None:
    text = "\n".join(entries) + "\n" if entries else ""
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _print_report(report: EvaluationReport, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report_to_dict(report), indent=2))
    elif fmt == "csv":
        sys.stdout.write(reports_to_csv([report]))
    else:
        print(f"matched {report.matched_count} of {report.test_count} "
              f"(accuracy {report.accuracy * 100:.2f}%)")
        print(f"threshold {report.threshold}")
        if report.per_source is not None:
            pairs = ", ".join(f"{k}={v}" for k, v in report.per_source.items())
            print(f"per-source matches: {pairs}")
        print(f"comparisons {report.comparisons}")
        print(f"elapsed {report.elapsed_seconds:.3f}s")


def _load_weak_corpora(paths: list[str]) -> list[Corpus]:
    return [load_wordlist(p, label=p) for p in paths]


# --- subcommand handlers ---

def _cmd_jaro(args: argparse.Namespace) -> int:
    from .similarity import jaro

    score = jaro(args.s1, args.s2)
    if args.format == "json":
        print(json.dumps({"s1": args.s1, "s2": args.s2, "score": score}))
    elif args.format == "csv":
        print("s1,s2,score")
        print(f"{args.s1},{args.s2},{score}")
    else:
        print(f"{score:.6f}")
    return 0


def _cmd_filter(args: argparse.Namespace) -> int:
    corpus = load_wordlist(args.in_path, label=args.in_path,
                           dedupe=args.dedupe)
    kept = filter_by_policy(corpus, _policy_from_args(args),
                            length_only=args.length_only)
    _emit_wordlist(kept.entries, args.out_path)
    print(f"kept {len(kept)} of {len(corpus)} "
          f"(dropped {len(corpus) - len(kept)})", file=sys.stderr)
    return 0


def _cmd_stats(args: argparse.Namespace) -> int:
    corpus = load_wordlist(args.in_path, label=args.in_path,
                           language=args.language, dedupe=args.dedupe)
    stats = corpus_stats(corpus)
    if args.format == "json":
        print(json.dumps(stats, indent=2))
    elif args.format == "csv":
        print("key,value")
        for key, value in stats.items():
            print(f"{key},{json.dumps(value) if isinstance(value, dict) else value}")
    else:
        for key, value in stats.items():
            print(f"{key}: {value}")
    return 0


def _cmd_generate(args: argparse.Namespace) -> int:
    weights = _parse_languages(args.lang)
    spec = GenerationSpec(count=args.count, seed=args.seed,
                          policy=_policy_from_args(args), languages=weights)
    dicts = _load_dictionaries(args, set(weights))
    corpus = generate(dicts, spec, label=args.label)
    _emit_wordlist(corpus.entries, args.out_path)
    return 0


def _cmd_mix(args: argparse.Namespace) -> int:
    proportions = [float(p) for p in args.proportions.split(",")]
    if len(proportions) != len(args.in_paths):
        raise ValueError("--proportions must list one value per --in file")
    languages = args.language or []
    if languages and len(languages) != len(args.in_paths):
        raise ValueError("--language must be given once per --in file, or not at all")
    parts = []
    for pos, path in enumerate(args.in_paths):
        language = languages[pos] if languages else "unknown"
        parts.append((load_wordlist(path, label=path, language=language),
                      proportions[pos]))
    mixed = mix_corpora(parts, seed=args.seed)
    _emit_wordlist(mixed.entries, args.out_path)
    print(f"mixed {len(mixed)} entries from {len(parts)} corpora",
          file=sys.stderr)
    return 0


def _cmd_evaluate(args: argparse.Namespace) -> int:
    test = load_wordlist(args.test, label=args.test)
    weak = _load_weak_corpora(args.weak)
    report = evaluate(
        test,
        weak if len(weak) > 1 else weak[0],
        args.threshold,
        exhaustive=args.exhaustive,
        prune=not args.no_prune,
        workers=args.workers,
    )
    _print_report(report, args.format)
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    thresholds = [_threshold_type(t) for t in args.thresholds.split(",")]
    test = load_wordlist(args.test, label=args.test)
    weak = _load_weak_corpora(args.weak)
    reports = threshold_sweep(
        test,
        weak if len(weak) > 1 else weak[0],
        thresholds,
        exhaustive=args.exhaustive,
        prune=not args.no_prune,
        workers=args.workers,
    )
    if args.format == "json":
        print(json.dumps([report_to_dict(r) for r in reports], indent=2))
    elif args.format == "csv":
        sys.stdout.write(reports_to_csv(reports))
    else:
        for report in reports:
            print(f"threshold {report.threshold}: matched "
                  f"{report.matched_count} of {report.test_count} "
                  f"(accuracy {report.accuracy * 100:.2f}%)")
    return 0


def _cmd_assess(args: argparse.Namespace) -> int:
    weak = _load_weak_corpora(args.weak)
    verdict = assess(args.password, weak, args.threshold,
                     _policy_from_args(args))
    if args.format == "json":
        print(json.dumps(verdict_to_dict(verdict), indent=2))
    elif args.format == "csv":
        print("label,max_similarity,nearest_weak,nearest_source,violations,threshold")
        print(f"{verdict.label},{verdict.max_similarity},"
              f"{verdict.nearest_weak},{verdict.nearest_source},"
              f"{';'.join(verdict.violations)},{verdict.threshold}")
    else:
        print(f"label: {verdict.label}")
        print(f"max similarity: {verdict.max_similarity:.6f} "
              f"(threshold {verdict.threshold})")
        print(f"nearest weak entry: {verdict.nearest_weak!r} "
              f"from {verdict.nearest_source}")
        if verdict.violations:
            print("policy violations: " + ", ".join(verdict.violations))
    return 0


def _cmd_reproduce(args: argparse.Namespace) -> int:
    grid = run_experiment(
        load_descriptor(args.descriptor),
        base_dir=args.descriptor,
        workers=args.workers,
    )
    if args.format == "json":
        print(json.dumps(grid, indent=2))
    elif args.format == "csv":
        print("cell,weak,test,matched_count,test_count,accuracy,accuracy_pct,threshold")
        for cell in grid["cells"] + ([grid["combined"]] if grid["combined"] else []):
            print(f"{cell['name']},{cell['weak']},{cell['test']},"
                  f"{cell['matched_count']},{cell['test_count']},"
                  f"{cell['accuracy']},{cell['accuracy_pct']},{cell['threshold']}")
    else:
        print(f"experiment: {grid['name']} (threshold {grid['threshold']})")
        rows = grid["cells"] + ([grid["combined"]] if grid["combined"] else [])
        if not rows:
            print("no cells")
        for cell in rows:
            print(f"  {cell['name']:24s} weak={cell['weak']:12s} "
                  f"test={cell['test']:12s} accuracy {cell['accuracy_pct']}% "
                  f"({cell['matched_count']}/{cell['test_count']})")
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    config = ServiceConfig(
        host=args.host,
        port=args.port,
        weak_paths=args.weak,
        threshold=args.threshold,
        max_body_bytes=args.max_body_bytes,
        cors_origin=args.cors_origin,
    )
    serve_forever(config)
    return 0


# --- experiment descriptors ---

def load_descriptor(path: str | None) -> dict:
    """Read a JSON experiment descriptor; None means the bundled desk-scale one."""
    if path is None:
        text = resources.files("pwsim.data").joinpath(
            "desk_experiment.json").read_text(encoding="utf-8")
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    descriptor = json.loads(text)
    if not isinstance(descriptor, dict):
        raise ValueError("descriptor must be a JSON object")
    return descriptor


def _materialize_resource(name: str, spec: dict, base_dir: str | None) -> Corpus:
    if "generate" in spec:
        params = spec["generate"]
        weights = params.get("languages", {"english": 1.0})
        policy = CompositionPolicy(**params["policy"]) if "policy" in params \
            else CompositionPolicy()
        gen_spec = GenerationSpec(
            count=int(params["count"]),
            seed=int(params.get("seed", 0)),
            policy=policy,
            languages={k: float(v) for k, v in weights.items()},
            style=params.get("style", "scattered"),
        )
        dicts = [builtin_dictionary(tag) for tag in sorted(gen_spec.languages)]
        return generate(dicts, gen_spec, label=name)
    if "file" in spec:
        import os.path

        path = spec["file"]
        if base_dir is not None and not os.path.isabs(path):
            path = os.path.join(os.path.dirname(os.path.abspath(base_dir)), path)
        if not os.path.exists(path):
            raise FileNotFoundError(path)
        corpus = load_wordlist(path, label=name,
                               language=spec.get("language", "unknown"),
                               dedupe=bool(spec.get("dedupe", False)))
        if spec.get("filter", True):
            corpus = filter_by_policy(
                corpus, length_only=bool(spec.get("length_only", False)))
        return corpus
    raise ValueError(f"resource {name!r} needs a 'generate' or 'file' key")


def run_experiment(descriptor: dict, base_dir: str | None = None,
                   workers: int = 1) -> dict:
    """Materialize every resource, evaluate each cell, and shape a grid.

    Missing wordlist files are reported all at once. The combined entry, when
    present, concatenates its test resources and keeps a per-source breakdown
    of which weak list matched.
    """
    threshold = float(descriptor.get("threshold", 0.5))
    resources_spec = descriptor.get("resources", {})
    corpora: dict[str, Corpus] = {}
    missing: list[str] = []
    for name, spec in resources_spec.items():
        try:
            corpora[name] = _materialize_resource(name, spec, base_dir)
        except FileNotFoundError as exc:
            missing.append(str(exc))
    if missing:
        raise ValueError("missing wordlist files: " + ", ".join(sorted(missing)))

    def _cell_report(weak_names: list[str], test_names: list[str],
                     name: str) -> dict:
        weak = [corpora[w] for w in weak_names]
        test_entries = [e for t in test_names for e in corpora[t].entries]
        test = Corpus(entries=test_entries, label="+".join(test_names))
        report = evaluate(test, weak if len(weak) > 1 else weak[0],
                          threshold, workers=workers)
        row = report_to_dict(report)
        row["name"] = name
        row["weak"] = "+".join(weak_names)
        row["test"] = "+".join(test_names)
        return row

    def _names(value: str | list[str]) -> list[str]:
        return [value] if isinstance(value, str) else list(value)

    cells = []
    for cell in descriptor.get("cells", []):
        cells.append(_cell_report(_names(cell["weak"]), _names(cell["test"]),
                                  cell["name"]))
    combined = None
    if "combined" in descriptor:
        spec = descriptor["combined"]
        combined = _cell_report(list(spec["weak"]), list(spec["test"]),
                                spec.get("name", "combined"))
    return {
        "name": descriptor.get("name", "experiment"),
        "threshold": threshold,
        "cells": cells,
        "combined": combined,
    }


# --- parser wiring ---

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pwsim",
        description="Similarity-based password strength tools: score pairs, "
                    "generate and filter wordlists, evaluate matching "
                    "accuracy, and serve a live meter.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("jaro", help="score one string pair")
    p.add_argument("s1")
    p.add_argument("s2")
    _add_format_flag(p)
    p.set_defaults(func=_cmd_jaro)

    p = sub.add_parser("filter", help="keep policy-compliant wordlist entries")
    p.add_argument("--in", dest="in_path", required=True)
    p.add_argument("--out", dest="out_path", default=None)
    p.add_argument("--length-only", action="store_true",
                   help="check only the length bounds, not character classes")
    p.add_argument("--dedupe", action="store_true")
    _add_policy_flags(p)
    p.set_defaults(func=_cmd_filter)

    p = sub.add_parser("stats", help="summarize a wordlist")
    p.add_argument("--in", dest="in_path", required=True)
    p.add_argument("--language", default="unknown")
    p.add_argument("--dedupe", action="store_true")
    _add_format_flag(p)
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("generate", help="generate policy-compliant passwords")
    p.add_argument("--lang", required=True,
                   help="language tag or weighted list, e.g. english:0.5,indian:0.5")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dict", action="append", default=None,
                   help="extra fragment dictionary file (repeatable)")
    p.add_argument("--label", default="")
    p.add_argument("--out", dest="out_path", default=None)
    _add_policy_flags(p)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("mix", help="combine wordlists at fixed proportions")
    p.add_argument("--in", dest="in_paths", action="append", required=True)
    p.add_argument("--proportions", required=True,
                   help="comma-separated, must sum to 1")
    p.add_argument("--language", action="append", default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", dest="out_path", default=None)
    p.set_defaults(func=_cmd_mix)

    p = sub.add_parser("evaluate", help="match a test wordlist against weak lists")
    p.add_argument("--test", required=True)
    p.add_argument("--weak", action="append", required=True)
    p.add_argument("--threshold", type=_threshold_type, default=0.5)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--no-prune", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    _add_format_flag(p)
    p.set_defaults(func=_cmd_evaluate)

    p = sub.add_parser("sweep", help="evaluate across ascending thresholds")
    p.add_argument("--test", required=True)
    p.add_argument("--weak", action="append", required=True)
    p.add_argument("--thresholds", required=True,
                   help="comma-separated ascending list")
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--no-prune", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    _add_format_flag(p)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("assess", help="rate one candidate password")
    p.add_argument("password")
    p.add_argument("--weak", action="append", required=True)
    p.add_argument("--threshold", type=_threshold_type, default=0.5)
    _add_policy_flags(p)
    _add_format_flag(p)
    p.set_defaults(func=_cmd_assess)

    p = sub.add_parser("reproduce",
                       help="run an experiment descriptor (bundled desk-scale "
                            "grid by default)")
    p.add_argument("--descriptor", default=None)
    p.add_argument("--workers", type=int, default=1)
    _add_format_flag(p)
    p.set_defaults(func=_cmd_reproduce)

    p = sub.add_parser("serve", help="run the HTTP meter service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--weak", action="append", required=True)
    p.add_argument("--threshold", type=_threshold_type, default=0.5)
    p.add_argument("--max-body-bytes", type=int, default=64 * 1024)
    p.add_argument("--cors-origin", default="*")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except KeyboardInterrupt:
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
