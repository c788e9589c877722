"""State changes and their entropy bookkeeping.

A past -> present transition is entropy-preserving when every tracked
proposition keeps its valuational entropy; any nonzero change makes it an
arbitrary change (collapse-like gain, measurement-like loss, or both).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import DimensionMismatchError, OrthogonalStateError, SingularMatrixError
from .linalg import Matrix, gram_projection, inner, mat_vec, rank
from .membership import (
    LogValue,
    StateVector,
    TruthValue,
    born_degree_of_truth,
    entropy_from_counts,
    max_match_counts,
    predicate_entropy_exact,
)
from .subspace import Subspace, contains_vector

__all__ = [
    "PropositionSet",
    "Tag",
    "TransitionClass",
    "TransitionRow",
    "TransitionReport",
    "TrajectoryEntry",
    "TrajectoryRow",
    "delta_entropy",
    "delta_entropy_exact",
    "classify_transition",
    "apply_matrix",
    "is_scaled_unitary",
    "projective_collapse",
    "entropy_trajectory",
    "find_indeterminate_subspace",
]


class PropositionSet:
    """Ordered, uniquely named subspaces sharing one ambient dimension."""

    def __init__(self, items: Iterable[tuple[str, Subspace]] | Mapping[str, Subspace]):
        if isinstance(items, Mapping):
            items = items.items()
        self._items: list[tuple[str, Subspace]] = []
        seen = set()
        for name, P in items:
            if name in seen:
                raise ValueError(f"duplicate proposition name {name!r}")
            seen.add(name)
            self._items.append((name, P))
        dims = {P.ambient_dim for _, P in self._items}
        if len(dims) > 1:
            raise DimensionMismatchError(f"propositions span several dimensions: {sorted(dims)}")

    @property
    def ambient_dim(self) -> int | None:
        return self._items[0][1].ambient_dim if self._items else None

    @property
    def names(self) -> list[str]:
        return [n for n, _ in self._items]

    def __iter__(self):
        return iter(self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __getitem__(self, name: str) -> Subspace:
        for n, P in self._items:
            if n == name:
                return P
        raise KeyError(name)


class Tag(enum.Enum):
    PRESERVED = "preserved"
    INFORMATION_GAIN = "informationGain"
    INFORMATION_LOSS = "informationLoss"

    @classmethod
    def of(cls, delta: LogValue) -> "Tag":
        if delta.sign < 0:
            return cls.INFORMATION_GAIN
        if delta.sign > 0:
            return cls.INFORMATION_LOSS
        return cls.PRESERVED


class TransitionClass(enum.Enum):
    ENTROPY_PRESERVING = "entropyPreserving"
    ARBITRARY_CHANGE = "arbitraryChange"


@dataclass(frozen=True)
class TransitionRow:
    name: str
    h_past: LogValue
    h_present: LogValue
    delta: LogValue
    tag: Tag

    def values(self, base=2) -> tuple[float, float, float]:
        return self.h_past.value(base), self.h_present.value(base), self.delta.value(base)


@dataclass(frozen=True)
class TransitionReport:
    rows: tuple[TransitionRow, ...]
    cls: TransitionClass

    def __getitem__(self, name: str) -> TransitionRow:
        for r in self.rows:
            if r.name == name:
                return r
        raise KeyError(name)


def delta_entropy_exact(u_past, u_present, P: Subspace) -> LogValue:
    return predicate_entropy_exact(u_present, P) - predicate_entropy_exact(u_past, P)


def delta_entropy(u_past, u_present, P: Subspace, base=2) -> float:
    """Entropy of "u_present in P" minus that of "u_past in P"."""
    return delta_entropy_exact(u_past, u_present, P).value(base)


def classify_transition(u_past, u_present, props: PropositionSet | Mapping[str, Subspace],
                        base=2) -> TransitionReport:
    if not isinstance(props, PropositionSet):
        props = PropositionSet(props)
    if not len(props):
        raise ValueError("cannot classify a transition against no propositions")
    rows = []
    for name, P in props:
        h0 = predicate_entropy_exact(u_past, P)
        h1 = predicate_entropy_exact(u_present, P)
        d = h1 - h0
        rows.append(TransitionRow(name, h0, h1, d, Tag.of(d)))
    if all(r.tag is Tag.PRESERVED for r in rows):
        cls = TransitionClass.ENTROPY_PRESERVING
    else:
        cls = TransitionClass.ARBITRARY_CHANGE
    return TransitionReport(tuple(rows), cls)


def _check_evolution(A: Matrix, n: int) -> None:
    if A.nrows != A.ncols:
        raise DimensionMismatchError(f"evolution matrix must be square, got {A.shape}")
    if A.nrows != n:
        raise DimensionMismatchError(f"{A.shape} matrix applied to a dimension-{n} state")
    if rank(A) < n:
        raise SingularMatrixError("evolution matrix is singular, so the map is not reversible")


def is_scaled_unitary(A: Matrix) -> bool:
    """True if ``A* A = c I`` for some positive c."""
    if A.nrows != A.ncols:
        return False
    G = A.conjugate_transpose() @ A
    arith = A.arith
    c = G.rows[0][0]
    if arith.is_zero(c) or not arith.is_zero(c - arith.real(c)) or arith.real(c) <= 0:
        return False
    return all(
        arith.eq(G.rows[i][j], c if i == j else arith.zero)
        for i in range(A.nrows) for j in range(A.ncols)
    )


def apply_matrix(u: StateVector, A: Matrix, require_unitary: bool = False) -> StateVector:
    """``A u`` for an invertible ``A``.

    Any invertible matrix is accepted since downstream quantities only see
    the ray; ``require_unitary`` additionally demands a scaled unitary.
    """
    _check_evolution(A, u.dim)
    if require_unitary and not is_scaled_unitary(A):
        raise ValueError("matrix is not a positive multiple of a unitary")
    return StateVector(mat_vec(A, u.components), u.arith)


def projective_collapse(u: StateVector, P: Subspace) -> StateVector:
    """Unnormalized projection of ``u`` onto ``P``."""
    if u.dim != P.ambient_dim:
        raise DimensionMismatchError("state and subspace dimensions differ")
    proj = gram_projection(P.matrix, u.components)
    if all(P.arith.is_zero(x) for x in proj):
        raise OrthogonalStateError("orthogonal state: projection onto the subspace is zero")
    return StateVector(proj, u.arith)


@dataclass(frozen=True)
class TrajectoryEntry:
    name: str
    entropy: LogValue
    truth: TruthValue
    born: object


@dataclass(frozen=True)
class TrajectoryRow:
    step: int
    state: StateVector
    entries: tuple[TrajectoryEntry, ...]


def _snapshot(u: StateVector, props: PropositionSet) -> tuple[TrajectoryEntry, ...]:
    out = []
    for name, P in props:
        mr = max_match_counts(u, P)
        n = P.ambient_dim
        if mr.m_in == n:
            tv = TruthValue.TRUE
        elif mr.m_out == n:
            tv = TruthValue.FALSE
        else:
            tv = TruthValue.INDETERMINATE
        out.append(TrajectoryEntry(name, entropy_from_counts(n, mr.m), tv,
                                   born_degree_of_truth(u, P)))
    return tuple(out)


def entropy_trajectory(u0: StateVector, A: Matrix, steps: int,
                       props: PropositionSet | Mapping[str, Subspace]) -> list[TrajectoryRow]:
    """Rows for ``A**k u0``, k = 0..steps (row 0 is the initial state)."""
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    if not isinstance(props, PropositionSet):
        props = PropositionSet(props)
    _check_evolution(A, u0.dim)
    rows = []
    u = u0
    for k in range(steps + 1):
        if k:
            u = StateVector(mat_vec(A, u.components), u.arith)
        rows.append(TrajectoryRow(k, u, _snapshot(u, props)))
    return rows


def _neither_parallel_nor_orthogonal(u: StateVector, v: tuple) -> bool:
    arith = u.arith
    if all(arith.is_zero(x) for x in v):
        return False
    if arith.is_zero(inner(v, u.components, arith)):
        return False
    return not contains_vector(Subspace([v], u.dim, arith), u.components)


def find_indeterminate_subspace(u: StateVector) -> Subspace:
    """A one-dimensional subspace whose proposition is neither true nor false in ``u``."""
    n = u.dim
    if n < 2:
        raise DimensionMismatchError("every proposition is determined in dimension 1")
    arith = u.arith
    c = u.components
    i = next(k for k in range(n) if not arith.is_zero(c[k]))
    others = [k for k in range(n) if k != i]

    def unit(k):
        return tuple(arith.one if t == k else arith.zero for t in range(n))

    j = others[0]
    v = tuple(
        c[i] if t == i else (c[i] + c[j] if t == j else arith.zero) for t in range(n)
    )
    if _neither_parallel_nor_orthogonal(u, v):
        return Subspace([v], n, arith)
    for j2 in others:
        e = unit(j2)
        v = tuple(x + y for x, y in zip(c, e))
        if _neither_parallel_nor_orthogonal(u, v):
            return Subspace([v], n, arith)
    raise RuntimeError(f"no indeterminate ray found for {u!r}")  # unreachable for n >= 2
