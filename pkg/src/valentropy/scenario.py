"""JSON scenario files: named states and subspaces over one ambient dimension.

Example::

    {
      "dimension": 2,
      "base": 2,
      "arithmetic": "exact",
      "states": {"z+": ["1", "0"], "x+": ["1", "1"]},
      "subspaces": [
        {"name": "X+", "pattern": "[a,a]"},
        {"name": "Z+", "basis": [["1", "0"]]}
      ]
    }

``arithmetic`` is ``"exact"`` (default) or ``"float"`` (with optional ``eps``).
Scalars are strings such as ``"1/2"`` or ``"1/2-3/4i"``; JSON numbers are
accepted too.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

from .errors import DimensionMismatchError
from .linalg import Matrix
from .membership import StateVector, log_base
from .scalar import EXACT, FloatArithmetic
from .subspace import Subspace, subspace_from_pattern

__all__ = [
    "Scenario",
    "ScenarioError",
    "load_scenario",
    "parse_base",
    "format_base",
    "subspace_from_descriptor",
    "subspace_to_descriptor",
    "load_matrix",
]


class ScenarioError(ValueError):
    """Malformed scenario or matrix input."""


@dataclass
class Scenario:
    dimension: int
    states: dict[str, StateVector] = field(default_factory=dict)
    subspaces: dict[str, Subspace] = field(default_factory=dict)
    base: Any = 2
    arith: Any = EXACT

    def state(self, name: str) -> StateVector:
        return self.states[name]

    def subspace(self, name: str) -> Subspace:
        return self.subspaces[name]


def parse_base(value) -> Fraction | str:
    """A logarithm base: a rational > 1 or the token ``"e"``."""
    if isinstance(value, str) and value.strip() == "e":
        return "e"
    try:
        b = Fraction(str(value).strip()) if not isinstance(value, Fraction) else value
    except (ValueError, ZeroDivisionError):
        raise ScenarioError(f"base must be a rational number > 1 or 'e', got {value!r}") from None
    try:
        log_base(b)
    except ValueError as exc:
        raise ScenarioError(str(exc)) from None
    return b


def format_base(base) -> str:
    return "e" if base == "e" else str(Fraction(base))


def subspace_from_descriptor(desc: dict, dimension: int, arith=EXACT) -> Subspace:
    if not isinstance(desc, dict):
        raise ScenarioError(f"subspace descriptor must be an object, got {desc!r}")
    if ("pattern" in desc) == ("basis" in desc):
        raise ScenarioError(f"subspace {desc.get('name')!r} needs exactly one of 'pattern', 'basis'")
    if "pattern" in desc:
        return subspace_from_pattern(desc["pattern"], dimension, arith)
    basis = desc["basis"]
    if not isinstance(basis, list) or not all(isinstance(v, list) for v in basis):
        raise ScenarioError("'basis' must be a list of vectors")
    return Subspace(basis, dimension, arith)


def subspace_to_descriptor(name: str, P: Subspace) -> dict:
    return {"name": name, "basis": [[P.arith.format(x) for x in v] for v in P.basis]}


def load_scenario(source, arith=None, base=None) -> Scenario:
    """Build a :class:`Scenario` from a path, JSON text or an already-parsed dict.

    ``arith`` and ``base`` override what the file says.
    Raises ScenarioError (or another ValueError) on malformed input.
    """
    if isinstance(source, (str, Path)) and not str(source).lstrip().startswith("{"):
        with open(source, encoding="utf-8") as fh:
            data = json.load(fh)
    elif isinstance(source, str):
        data = json.loads(source)
    else:
        data = source
    if not isinstance(data, dict):
        raise ScenarioError("scenario must be a JSON object")

    if arith is None:
        mode = data.get("arithmetic", "exact")
        if mode == "exact":
            arith = EXACT
        elif mode == "float":
            arith = FloatArithmetic(float(data.get("eps", 1e-9)))
        else:
            raise ScenarioError(f"unknown arithmetic {mode!r}")
    base = parse_base(data.get("base", 2) if base is None else base)

    states_in = data.get("states", {})
    subs_in = data.get("subspaces", [])
    if not isinstance(states_in, dict):
        raise ScenarioError("'states' must map names to component lists")
    if not isinstance(subs_in, list):
        raise ScenarioError("'subspaces' must be a list of descriptors")

    dimension = data.get("dimension")
    if dimension is None:
        first = next(iter(states_in.values()), None)
        if first is None:
            raise ScenarioError("scenario needs 'dimension' or at least one state")
        dimension = len(first)
    if not isinstance(dimension, int) or isinstance(dimension, bool) or dimension < 1:
        raise ScenarioError(f"dimension must be a positive integer, got {dimension!r}")

    states = {}
    for name, comps in states_in.items():
        if not isinstance(comps, list):
            raise ScenarioError(f"state {name!r} must be a list of scalars")
        if len(comps) != dimension:
            raise DimensionMismatchError(
                f"state {name!r} has {len(comps)} components, dimension is {dimension}"
            )
        states[name] = StateVector(comps, arith)

    subspaces = {}
    for desc in subs_in:
        name = desc.get("name") if isinstance(desc, dict) else None
        if not isinstance(name, str):
            raise ScenarioError(f"subspace descriptor without a string 'name': {desc!r}")
        if name in subspaces:
            raise ScenarioError(f"duplicate subspace name {name!r}")
        subspaces[name] = subspace_from_descriptor(desc, dimension, arith)

    return Scenario(dimension, states, subspaces, base, arith)


def load_matrix(source, arith=EXACT) -> Matrix:
    """A square matrix from a JSON file (or parsed list) of rows of scalars."""
    if isinstance(source, (str, Path)):
        with open(source, encoding="utf-8") as fh:
            data = json.load(fh)
    else:
        data = source
    if isinstance(data, dict):
        data = data.get("matrix")
    if not isinstance(data, list) or not data or not all(isinstance(r, list) for r in data):
        raise ScenarioError("matrix must be a non-empty list of rows")
    return Matrix(data, arith)
