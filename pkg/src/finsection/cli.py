"""Batch front-end: load a fixture document, run a solver or check, emit one
JSON report on stdout.

Exit codes: 0 success, 2 parse failure (bad JSON or document shape),
3 invariant violation in the document, 4 solver precondition failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .document import DocumentParseError, build_document, parse_document, time_to_literal
from .filtered import classify_time, graph
from .measure import format_rational, parse_rational
from .section import (
    accessible_section,
    measurable_section,
    optional_section,
    predictable_section,
)
from .souslin import (
    check_monotone,
    eval_scheme,
    merge_intersection,
    merge_union,
    monotonize,
    scheme_to_literal,
    theta,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_PRECONDITION = 4


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 1:
        raise argparse.ArgumentTypeError("value must be >= 1")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="finsection",
        description="Section-theorem toolkit over finite filtered probability spaces.",
    )
    parser.add_argument("--seed", type=int, default=None, help="seed for randomized workflows (reports stay deterministic per seed)")
    parser.add_argument("--format", choices=("json", "pretty"), default="json", help="report rendering")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("theta", help="evaluate the pairing bijection")
    p.add_argument("k", type=_positive_int)
    p.add_argument("m", type=_positive_int)

    sub.add_parser("validate", help="check every document invariant")

    p = sub.add_parser("section", help="run a section solver on a named set")
    p.add_argument("--kind", required=True, choices=("predictable", "optional", "measurable", "accessible"))
    p.add_argument("--set", required=True, dest="set_name")
    p.add_argument("--epsilon", default="0/1")
    p.add_argument("--strategy", choices=("debut", "souslin"), default="souslin")

    p = sub.add_parser("classify-time", help="accessible/totally-inaccessible decomposition of a stopping time")
    p.add_argument("--time", required=True, dest="time_name")

    p = sub.add_parser("souslin", help="scheme operations on named schemes")
    p.add_argument("operation", choices=("eval", "union", "intersect", "monotonize"))
    p.add_argument("--scheme", required=True, action="append", dest="scheme_names")

    return parser


def _emit(obj, fmt: str):
    if fmt == "pretty":
        print(json.dumps(obj, sort_keys=True, indent=2))
    else:
        print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def _read_document(path):
    if path is None:
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise DocumentParseError(f"cannot read document: {exc}") from exc


def _lookup(table: dict, name: str, kind: str):
    if name not in table:
        raise ValueError(f"unknown {kind} {name!r}")
    return table[name]


def _section_report(args, doc) -> dict:
    target = _lookup(doc.sets, args.set_name, "set")
    eps = parse_rational(args.epsilon)
    if args.kind == "predictable":
        result = predictable_section(target, doc.X, eps, args.strategy)
    elif args.kind == "optional":
        result = optional_section(target, doc.X, eps, args.strategy)
    elif args.kind == "accessible":
        result = accessible_section(target, doc.X, eps, args.strategy)
    else:
        result = measurable_section(target, doc.X.space, doc.X.grid)
    return {
        "kind": args.kind,
        "strategy": result.strategy,
        "epsilon": format_rational(eps),
        "deficit": format_rational(result.deficit),
        "time": time_to_literal(result.time),
        "trace": {
            "m_star": list(result.trace.chosen_prefix),
            "envelope_measures": [format_rational(m) for m in result.trace.envelope_measures],
        },
        "oracle_deficit": format_rational(result.trace.oracle_deficit),
    }


def _classify_report(args, doc) -> dict:
    tau = _lookup(doc.times, args.time_name, "time")
    part = classify_time(tau, doc.X)
    ti_mass = doc.X.space.prob(part.ti_part.finite_support())
    return {
        "time": time_to_literal(tau),
        "ti_part": time_to_literal(part.ti_part),
        "acc_part": time_to_literal(part.acc_part),
        "cover": [time_to_literal(rho) for rho in part.cover],
        "ti_finite_mass": format_rational(ti_mass),
        "covered": sorted(
            f"{atom}@{k}" for atom, k in graph(part.acc_part).cells
        ),
    }


def _souslin_report(args, doc) -> dict:
    schemes = [_lookup(doc.schemes, name, "scheme") for name in args.scheme_names]
    op = args.operation
    if op == "eval":
        if len(schemes) != 1:
            raise ValueError("souslin eval takes exactly one scheme")
        result = schemes[0]
    elif op == "monotonize":
        if len(schemes) != 1:
            raise ValueError("souslin monotonize takes exactly one scheme")
        result = monotonize(schemes[0])
    elif op == "union":
        result = merge_union(schemes)
    else:
        result = merge_intersection(schemes)
    order = {e: i for i, e in enumerate(result.paving.ground)}
    report = {
        "operation": op,
        "schemes": list(args.scheme_names),
        "eval": [str(e) for e in sorted(eval_scheme(result), key=order.get)],
        "monotone": list(check_monotone(result)),
    }
    if op != "eval":
        report["result_scheme"] = scheme_to_literal(result)
    return report


def main(argv=None) -> int:
    parser = _build_parser()
    # the document path is an optional trailing positional for every
    # data-consuming subcommand; parse_known_args keeps it order-free
    args, extra = parser.parse_known_args(argv)
    if args.command == "theta":
        if extra:
            parser.error(f"unrecognized arguments: {' '.join(extra)}")
        _emit(theta(args.k, args.m), args.format)
        return EXIT_OK
    if len(extra) > 1 or (extra and extra[0].startswith("-")):
        parser.error(f"unrecognized arguments: {' '.join(extra)}")
    document_path = extra[0] if extra else None

    try:
        raw = parse_document(_read_document(document_path))
        doc, violations = build_document(raw)
    except DocumentParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE

    if args.command == "validate":
        report = {
            "status": "ok" if not violations else "invalid",
            "violations": sorted(violations),
        }
        if doc is not None:
            report["summary"] = {
                "atoms": len(doc.X.atoms),
                "times": doc.X.n_times,
                "sets": sorted(doc.sets),
                "named_times": sorted(doc.times),
                "schemes": sorted(doc.schemes),
            }
        _emit(report, args.format)
        return EXIT_OK if not violations else EXIT_INVALID

    if violations:
        for line in violations:
            print(f"invariant violation: {line}", file=sys.stderr)
        return EXIT_INVALID

    try:
        if args.command == "section":
            report = _section_report(args, doc)
        elif args.command == "classify-time":
            report = _classify_report(args, doc)
        else:
            report = _souslin_report(args, doc)
    except ValueError as exc:
        print(f"precondition failure: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION

    _emit(report, args.format)
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
