"""Reference scenarios and the self-checking demo behind ``valentropy paper-demo``.

Two fixtures: four propositions about a two-qubit system (dimension 4)
and the spin propositions X+, Z+, Z- of one qubit (dimension 2). The
expected values below are written out by hand, not computed.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from typing import TextIO

from .dynamics import TransitionClass, classify_transition
from .membership import LogValue, TruthValue, evaluate, log_base, max_match_counts
from .scenario import format_base, load_scenario

TWO_QUBIT = {
    "dimension": 4,
    "states": {"psi1": ["1", "0", "0", "0"]},
    "subspaces": [
        {"name": "P1", "pattern": "[a,0,0,0]"},
        {"name": "P2", "pattern": "[0,a,0,0]"},
        {"name": "P3", "pattern": "[a,a,a,a]"},
        {"name": "P4", "pattern": "[a,a,0,0]"},
    ],
}

QUBIT_SPIN = {
    "dimension": 2,
    "states": {"z+": ["1", "0"], "z-": ["0", "1"], "x+": ["1", "1"]},
    "subspaces": [
        {"name": "X+", "pattern": "[a,a]"},
        {"name": "Z+", "pattern": "[a,0]"},
        {"name": "Z-", "pattern": "[0,a]"},
    ],
}

LOG2 = LogValue.log(2)

# (state, subspace) -> entropy as a multiple of log 2
SPIN_ENTROPIES = {
    ("z+", "X+"): 1, ("z+", "Z+"): 0, ("z+", "Z-"): 0,
    ("z-", "X+"): 1, ("z-", "Z+"): 0, ("z-", "Z-"): 0,
    ("x+", "X+"): 0, ("x+", "Z+"): 1, ("x+", "Z-"): 1,
}

# (past, present) -> (class, {subspace: delta as a multiple of log 2})
SPIN_TRANSITIONS = {
    ("z+", "z-"): (TransitionClass.ENTROPY_PRESERVING, {"X+": 0, "Z+": 0, "Z-": 0}),
    ("z+", "x+"): (TransitionClass.ARBITRARY_CHANGE, {"X+": -1, "Z+": 1, "Z-": 1}),
}

TWO_QUBIT_TRUTHS = {
    "P1": TruthValue.TRUE,
    "P2": TruthValue.FALSE,
    "P3": TruthValue.INDETERMINATE,
    "P4": TruthValue.INDETERMINATE,
}


@dataclass(frozen=True)
class Check:
    criterion: int
    label: str
    detail: str
    ok: bool


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def run_checks(base=2, two_qubit: dict = TWO_QUBIT, qubit_spin: dict = QUBIT_SPIN) -> list[Check]:
    checks: list[Check] = []
    b = format_base(base)

    sc = load_scenario(two_qubit, base=base)
    psi1 = sc.state("psi1")
    for name, expected in TWO_QUBIT_TRUTHS.items():
        got = evaluate(psi1, sc.subspace(name), base).truth
        checks.append(Check(1, f"truth(psi1, {name})", f"{got} (expected {expected})",
                            got is expected))
    mr = max_match_counts(psi1, sc.subspace("P3"))
    checks.append(Check(1, "(|M|, |M_perp|) for (psi1, P3)", f"({mr.m_in}, {mr.m_out}) (expected (1, 3))",
                        (mr.m_in, mr.m_out) == (1, 3)))
    rep = evaluate(psi1, sc.subspace("P3"), base)
    checks.append(Check(1, "entropy pair (N, m) for (psi1, P3)", f"({rep.n}, {rep.m}) (expected (4, 3))",
                        (rep.n, rep.m) == (4, 3)))
    expected_h = (math.log(4) - 0.75 * math.log(3)) / log_base(base)
    checks.append(Check(1, f"H(psi1, P3) base {b}", f"{_fmt(rep.entropy)} (expected {_fmt(expected_h)})",
                        abs(rep.entropy - expected_h) <= 1e-12))

    sc = load_scenario(qubit_spin, base=base)
    bit = LOG2.value(base)
    for (s, p), k in SPIN_ENTROPIES.items():
        rep = evaluate(sc.state(s), sc.subspace(p), base)
        ok = rep.exact_entropy == LOG2 * k and abs(rep.entropy - k * bit) <= 1e-12
        checks.append(Check(2, f"H({s}, {p}) base {b}",
                            f"{_fmt(rep.entropy)} [N={rep.n}, m={rep.m}] (expected {_fmt(k * bit)})", ok))

    props = {name: sc.subspace(name) for name in ("X+", "Z+", "Z-")}
    for (past, present), (cls, deltas) in SPIN_TRANSITIONS.items():
        report = classify_transition(sc.state(past), sc.state(present), props, base)
        checks.append(Check(3, f"class({past} -> {present})", f"{report.cls.value} (expected {cls.value})",
                            report.cls is cls))
        for name, k in deltas.items():
            d = report[name].delta
            checks.append(Check(3, f"dH({name}) for {past} -> {present} base {b}",
                                f"{_fmt(d.value(base))} (expected {_fmt(k * bit)})",
                                d == LOG2 * k and abs(d.value(base) - k * bit) <= 1e-12))
    return checks


def run_demo(base=2, out: TextIO | None = None, **fixtures) -> int:
    """Print every check; return 0 if all pass, 1 otherwise."""
    out = out or sys.stdout
    checks = run_checks(base, **fixtures)
    for c in checks:
        print(f"{'PASS' if c.ok else 'FAIL'}  [{c.criterion}] {c.label}: {c.detail}", file=out)
    failed = sum(not c.ok for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} checks passed", file=out)
    return 1 if failed else 0
