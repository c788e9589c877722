"""Command-line front end.

Commands: entropy, truth, delta, classify, trajectory, complement, paper-demo.
Exit codes: 0 ok, 1 demo check failed, 2 unknown name, 3 malformed input,
4 singular matrix, 5 dimension cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from .demo import run_demo
from .dynamics import PropositionSet, classify_transition, entropy_trajectory
from .errors import DimensionCapError, SingularMatrixError
from .membership import evaluate
from .scalar import FloatArithmetic
from .scenario import (
    format_base,
    load_matrix,
    load_scenario,
    parse_base,
    subspace_to_descriptor,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_UNKNOWN_NAME = 2
EXIT_MALFORMED = 3
EXIT_SINGULAR = 4
EXIT_DIMENSION_CAP = 5


class UnknownName(LookupError):
    pass


def _num(x: float) -> str:
    return f"{x:.12g}"


def _born_json(p):
    return str(p) if isinstance(p, Fraction) else p


def dump_json(payload: Any) -> str:
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def dump_csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([_num(x) if isinstance(x, float) else x for x in r])
    return buf.getvalue()


def _resolve(mapping: dict, names: Sequence[str], kind: str) -> list:
    missing = [n for n in names if n not in mapping]
    if missing:
        raise UnknownName(f"unknown {kind} name(s): {', '.join(missing)}")
    return [mapping[n] for n in names]


def _subspace_names(scenario, arg: str | None) -> list[str]:
    if not arg:
        return list(scenario.subspaces)
    return [s.strip() for s in arg.split(",") if s.strip()]


def _load(args):
    arith = FloatArithmetic(args.eps) if args.float else None
    base = parse_base(args.base) if args.base is not None else None
    return load_scenario(args.scenario, arith=arith, base=base)


def _entropy_rows(args):
    sc = _load(args)
    (u,) = _resolve(sc.states, [args.state], "state")
    names = _subspace_names(sc, args.subspaces)
    subs = _resolve(sc.subspaces, names, "subspace")
    fmt = sc.arith.format
    rows = []
    for name, P in zip(names, subs):
        r = evaluate(u, P, sc.base)
        mr = r.matches
        rows.append({
            "subspace": name,
            "truth": r.truth.value,
            "m_in": mr.m_in,
            "m_out": mr.m_out,
            "n": r.n,
            "m": r.m,
            "entropy": r.entropy,
            "h_max": r.h_max,
            "born": _born_json(r.born),
            "shannon": r.shannon,
            "witness_in": None if mr.witness_in is None else [fmt(x) for x in mr.witness_in],
            "witness_out": None if mr.witness_out is None else [fmt(x) for x in mr.witness_out],
        })
    return sc, rows


def cmd_entropy(args) -> str:
    sc, rows = _entropy_rows(args)
    if args.output == "csv":
        cols = ["subspace", "truth", "m_in", "m_out", "n", "m", "entropy", "h_max", "born", "shannon"]
        return dump_csv(cols, [[r[c] for c in cols] for r in rows])
    return dump_json({"state": args.state, "base": format_base(sc.base), "rows": rows})


def cmd_truth(args) -> str:
    sc, rows = _entropy_rows(args)
    if args.output == "csv":
        return dump_csv(["subspace", "truth"], [[r["subspace"], r["truth"]] for r in rows])
    return dump_json({"state": args.state,
                      "truths": {r["subspace"]: r["truth"] for r in rows}})


def _transition(args):
    sc = _load(args)
    past, present = _resolve(sc.states, [args.past, args.present], "state")
    names = _subspace_names(sc, args.subspaces)
    props = PropositionSet(zip(names, _resolve(sc.subspaces, names, "subspace")))
    return sc, classify_transition(past, present, props, sc.base)


def _transition_rows(report, base) -> list[dict]:
    out = []
    for r in report.rows:
        h0, h1, d = r.values(base)
        out.append({
            "proposition": r.name,
            "h_past": h0,
            "h_present": h1,
            "delta": d,
            "tag": r.tag.value,
            "n": r.h_past.divisor,
        })
    return out


def cmd_delta(args) -> str:
    sc, report = _transition(args)
    rows = _transition_rows(report, sc.base)
    if args.output == "csv":
        cols = ["proposition", "h_past", "h_present", "delta", "tag"]
        return dump_csv(cols, [[r[c] for c in cols] for r in rows])
    return dump_json({"past": args.past, "present": args.present,
                      "base": format_base(sc.base), "rows": rows})


def cmd_classify(args) -> str:
    sc, report = _transition(args)
    rows = _transition_rows(report, sc.base)
    if args.output == "csv":
        cols = ["proposition", "h_past", "h_present", "delta", "tag"]
        return dump_csv(cols, [[r[c] for c in cols] for r in rows])
    return dump_json({"past": args.past, "present": args.present,
                      "base": format_base(sc.base), "class": report.cls.value, "rows": rows})


def cmd_trajectory(args) -> str:
    sc = _load(args)
    (u,) = _resolve(sc.states, [args.state], "state")
    names = _subspace_names(sc, args.subspaces)
    props = PropositionSet(zip(names, _resolve(sc.subspaces, names, "subspace")))
    A = load_matrix(args.matrix, sc.arith)
    rows = entropy_trajectory(u, A, args.steps, props)
    flat = [
        [row.step, e.name, e.entropy.value(sc.base), e.truth.value, float(e.born)]
        for row in rows for e in row.entries
    ]
    if args.output == "json":
        return dump_json({"base": format_base(sc.base), "rows": [
            {"step": s, "prop": p, "entropy": h, "truth": t, "born": b} for s, p, h, t, b in flat
        ]})
    return dump_csv(["step", "prop", "entropy", "truth", "born"], flat)


def cmd_complement(args) -> str:
    sc = _load(args)
    names = _subspace_names(sc, args.subspace)
    subs = _resolve(sc.subspaces, names, "subspace")
    descs = [subspace_to_descriptor(f"{n}_perp", P.orthocomplement()) for n, P in zip(names, subs)]
    return dump_json({"subspaces": descs})


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--scenario", required=True, help="scenario JSON file")
    common.add_argument("--base", default=None, help="log base: rational > 1 or 'e' (default 2)")
    common.add_argument("--float", action="store_true", help="tolerant floating-point matching")
    common.add_argument("--eps", type=float, default=1e-9, help="tolerance for --float")
    common.add_argument("--output", choices=["json", "csv"], default=None)

    parser = argparse.ArgumentParser(
        prog="valentropy",
        description="Valuational entropy of subspace membership and state-change classification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, help_ in [
        ("entropy", cmd_entropy, "entropy report for one state against subspaces"),
        ("truth", cmd_truth, "truth values for one state"),
    ]:
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--state", required=True)
        p.add_argument("--subspaces", help="comma-separated names (default: all)")
        p.set_defaults(func=func, default_output="json")

    for name, func, help_ in [
        ("delta", cmd_delta, "entropy change per proposition"),
        ("classify", cmd_classify, "classify a past -> present transition"),
    ]:
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--past", required=True)
        p.add_argument("--present", required=True)
        p.add_argument("--subspaces", help="comma-separated names (default: all)")
        p.set_defaults(func=func, default_output="json")

    p = sub.add_parser("trajectory", parents=[common], help="iterate an evolution matrix")
    p.add_argument("--state", required=True)
    p.add_argument("--matrix", required=True, help="JSON file with the matrix rows")
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--subspaces", help="comma-separated names (default: all)")
    p.set_defaults(func=cmd_trajectory, default_output="csv")

    p = sub.add_parser("complement", parents=[common], help="orthocomplement descriptors")
    p.add_argument("--subspace", help="comma-separated names (default: all)")
    p.set_defaults(func=cmd_complement, default_output="json")

    p = sub.add_parser("paper-demo", help="reproduce and self-check the reference values")
    p.add_argument("--base", default="2", help="log base: rational > 1 or 'e' (default 2)")
    p.set_defaults(func=None)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "paper-demo":
            return run_demo(parse_base(args.base))
        if args.output is None:
            args.output = args.default_output
        sys.stdout.write(args.func(args))
        return EXIT_OK
    except UnknownName as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN_NAME
    except SingularMatrixError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except DimensionCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIMENSION_CAP
    except (ValueError, OSError, TypeError) as exc:
        print(f"error: malformed input: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
