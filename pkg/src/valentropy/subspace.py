"""Closed linear subspaces of a finite-dimensional space, kept as independent bases."""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DimensionMismatchError, PatternError
from .linalg import Matrix, inner, nullspace_basis, rank, rref, solve_consistent
from .pattern import PatternVector, parse_pattern
from .scalar import EXACT

__all__ = ["Subspace", "subspace_from_pattern", "orthocomplement", "contains_vector"]


class Subspace:
    """Span of a list of linearly independent column vectors in an N-dimensional space.

    ``basis`` keeps the independent vectors as presented (dependent ones are
    dropped in order). Equality compares ``canonical``, the reduced echelon
    form of the basis rows, so it does not depend on the presentation.
    """

    __slots__ = ("ambient_dim", "basis", "canonical", "arith", "_matrix")

    def __init__(self, vectors: Iterable[Sequence], ambient_dim: int, arith=EXACT):
        if ambient_dim < 1:
            raise ValueError("ambient dimension must be at least 1")
        kept: list[tuple] = []
        for v in vectors:
            v = tuple(arith.coerce(x) for x in v)
            if len(v) != ambient_dim:
                raise DimensionMismatchError(
                    f"basis vector of length {len(v)} in ambient dimension {ambient_dim}"
                )
            if rank(Matrix.from_columns(kept + [v], ambient_dim, arith)) > len(kept):
                kept.append(v)
        self.ambient_dim = ambient_dim
        self.basis = tuple(kept)
        self.arith = arith
        self._matrix = Matrix.from_columns(kept, ambient_dim, arith)
        if kept:
            rows, pivots = rref(Matrix(kept, arith, ncols=ambient_dim))
            self.canonical = rows[: len(pivots)]
        else:
            self.canonical = ()

    @classmethod
    def full(cls, n: int, arith=EXACT) -> "Subspace":
        return cls(Matrix.identity(n, arith).columns(), n, arith)

    @classmethod
    def zero(cls, n: int, arith=EXACT) -> "Subspace":
        return cls([], n, arith)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def matrix(self) -> Matrix:
        """Basis as an ``N x dim`` matrix."""
        return self._matrix

    def orthocomplement(self) -> "Subspace":
        return orthocomplement(self)

    def contains(self, u) -> bool:
        return contains_vector(self, u)

    def with_arithmetic(self, arith) -> "Subspace":
        if arith == self.arith:
            return self
        return Subspace(self.basis, self.ambient_dim, arith)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        if self.ambient_dim != other.ambient_dim or self.dim != other.dim:
            return False
        eq = self.arith.eq
        return all(eq(x, y) for r, s in zip(self.canonical, other.canonical) for x, y in zip(r, s))

    def __hash__(self) -> int:
        if self.arith.exact:
            return hash((self.ambient_dim, self.canonical))
        return hash((self.ambient_dim, self.dim))

    def __repr__(self) -> str:
        vecs = ", ".join("(" + ", ".join(self.arith.format(x) for x in v) + ")" for v in self.basis)
        return f"Subspace(N={self.ambient_dim}, span{{{vecs}}})"


def subspace_from_pattern(p: PatternVector | str, ambient_dim: int | None = None,
                          arith=EXACT) -> Subspace:
    """Subspace of all parameter assignments of a pattern.

    The basis is the coefficient vector of each parameter, with dependent
    ones dropped; ``"[a,a]"`` and ``"[2*b,2*b]"`` give equal subspaces.
    """
    if isinstance(p, str):
        p = parse_pattern(p)
    if ambient_dim is None:
        ambient_dim = len(p)
    if len(p) != ambient_dim:
        raise DimensionMismatchError(
            f"pattern has {len(p)} entries but the ambient dimension is {ambient_dim}"
        )
    if ambient_dim < 1:
        raise PatternError("empty pattern")
    return Subspace(p.coefficient_columns(), ambient_dim, arith)


def orthocomplement(P: Subspace) -> Subspace:
    """All vectors orthogonal to ``P``: the kernel of the conjugate-transposed basis."""
    if P.dim == 0:
        return Subspace.full(P.ambient_dim, P.arith)
    K = nullspace_basis(P.matrix.conjugate_transpose())
    return Subspace(K.columns(), P.ambient_dim, P.arith)


def contains_vector(P: Subspace, u) -> bool:
    """True iff ``u`` lies in the span of ``P`` (rank test, scale-invariant)."""
    comps = getattr(u, "components", u)
    if len(comps) != P.ambient_dim:
        raise DimensionMismatchError(
            f"vector of length {len(comps)} in ambient dimension {P.ambient_dim}"
        )
    arith = P.arith
    comps = tuple(arith.coerce(x) for x in comps)
    if all(arith.is_zero(x) for x in comps):
        return True
    if P.dim == 0:
        return False
    return solve_consistent(P.matrix, comps) is not None


def is_orthogonal_to(P: Subspace, u) -> bool:
    comps = getattr(u, "components", u)
    return all(P.arith.is_zero(inner(b, comps, P.arith)) for b in P.basis)
