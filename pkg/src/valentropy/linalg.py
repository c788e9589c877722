"""Small dense linear-algebra kernel over an arithmetic context.

Everything here works for both :data:`~valentropy.scalar.EXACT` and
:class:`~valentropy.scalar.FloatArithmetic`; exact mode never rounds.
Vectors are plain tuples of field elements.
"""

from __future__ import annotations

from math import lcm
from typing import Sequence

from .errors import DimensionMismatchError, SingularGramError
from .scalar import EXACT, Scalar

__all__ = [
    "Matrix",
    "rank",
    "rref",
    "solve_consistent",
    "nullspace_basis",
    "gram_projection",
    "inner",
    "mat_vec",
]


class Matrix:
    """An immutable ``nrows x ncols`` matrix stored row-major.

    Zero-sized shapes are allowed (a nullspace basis may have no columns).
    """

    __slots__ = ("rows", "nrows", "ncols", "arith")

    def __init__(self, rows, arith=EXACT, ncols: int | None = None):
        rows = tuple(tuple(arith.coerce(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatchError("ragged matrix rows")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols
        self.arith = arith

    @classmethod
    def from_columns(cls, columns, nrows: int, arith=EXACT) -> "Matrix":
        columns = [tuple(c) for c in columns]
        if any(len(c) != nrows for c in columns):
            raise DimensionMismatchError("column length does not match nrows")
        rows = [tuple(c[i] for c in columns) for i in range(nrows)]
        return cls(rows, arith, ncols=len(columns))

    @classmethod
    def identity(cls, n: int, arith=EXACT) -> "Matrix":
        return cls(
            [[arith.one if i == j else arith.zero for j in range(n)] for i in range(n)],
            arith,
            ncols=n,
        )

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "Matrix":
        return Matrix.from_columns(self.rows, self.ncols, self.arith)

    def conjugate_transpose(self) -> "Matrix":
        conj = self.arith.conj
        return Matrix.from_columns(
            [tuple(conj(x) for x in r) for r in self.rows], self.ncols, self.arith
        )

    def select_rows(self, indices: Sequence[int]) -> "Matrix":
        return Matrix([self.rows[i] for i in indices], self.arith, ncols=self.ncols)

    def augment(self, column: Sequence) -> "Matrix":
        if len(column) != self.nrows:
            raise DimensionMismatchError("augmenting column has wrong length")
        return Matrix(
            [r + (column[i],) for i, r in enumerate(self.rows)],
            self.arith,
            ncols=self.ncols + 1,
        )

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise DimensionMismatchError(f"cannot multiply {self.shape} by {other.shape}")
            cols = [mat_vec(self, c) for c in other.columns()]
            return Matrix.from_columns(cols, self.nrows, self.arith)
        return mat_vec(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix) or self.shape != other.shape:
            return NotImplemented if not isinstance(other, Matrix) else False
        eq = self.arith.eq
        return all(eq(x, y) for r, s in zip(self.rows, other.rows) for x, y in zip(r, s))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(self.arith.format(x) for x in r) + "]" for r in self.rows)
        return f"Matrix([{body}])"


def mat_vec(A: Matrix, v: Sequence) -> tuple:
    if len(v) != A.ncols:
        raise DimensionMismatchError(f"vector of length {len(v)} vs {A.ncols} columns")
    zero = A.arith.zero
    out = []
    for r in A.rows:
        acc = zero
        for a, x in zip(r, v):
            acc = acc + a * x
        out.append(acc)
    return tuple(out)


def inner(x: Sequence, y: Sequence, arith=EXACT):
    """Hermitian inner product, conjugate-linear in the first argument."""
    if len(x) != len(y):
        raise DimensionMismatchError("inner product of vectors of different length")
    acc = arith.zero
    for a, b in zip(x, y):
        acc = acc + arith.conj(a) * b
    return acc


def _clear_denominators(row: list) -> list:
    den = 1
    for x in row:
        den = lcm(den, x.re.denominator, x.im.denominator)
    return [x * den for x in row] if den != 1 else row


def _bareiss_rank(A: Matrix) -> int:
    # Fraction-free: rows are scaled to Gaussian integers, every division below is exact.
    M = [_clear_denominators(list(r)) for r in A.rows]
    nrows, ncols = A.nrows, A.ncols
    rank = 0
    prev = Scalar(1)
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((r for r in range(rank, nrows) if M[r][col]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        p = M[rank][col]
        prow = M[rank]
        for r in range(rank + 1, nrows):
            row = M[r]
            a = row[col]
            for c in range(col + 1, ncols):
                row[c] = (row[c] * p - a * prow[c]) / prev
            row[col] = Scalar(0)
        prev = p
        rank += 1
    return rank


def rref(A: Matrix, pivoting: str = "first") -> tuple[tuple[tuple, ...], tuple[int, ...]]:
    """Reduced row-echelon form with unit pivots.

    ``pivoting="first"`` takes the first nonzero entry of the column (the
    exact default); ``"largest"`` takes the entry of largest modulus, which
    float mode always uses. Returns ``(rows, pivot_columns)``.
    """
    arith = A.arith
    if not arith.exact:
        pivoting = "largest"
    M = [list(r) for r in A.rows]
    nrows, ncols = A.nrows, A.ncols
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        if pivoting == "first":
            piv = next((i for i in range(r, nrows) if not arith.is_zero(M[i][col])), None)
        else:
            piv = max(range(r, nrows), key=lambda i: arith.abs2(M[i][col]))
            if arith.is_zero(M[piv][col]):
                piv = None
        if piv is None:
            if not arith.exact:
                for i in range(r, nrows):
                    M[i][col] = arith.zero
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = arith.one / M[r][col]
        M[r] = [x * inv for x in M[r]]
        M[r][col] = arith.one
        for i in range(nrows):
            if i != r:
                f = M[i][col]
                if not arith.is_zero(f):
                    M[i] = [x - f * y for x, y in zip(M[i], M[r])]
                M[i][col] = arith.zero
        pivots.append(col)
        r += 1
    for i in range(r, nrows):
        M[i] = [arith.zero] * ncols
    return tuple(tuple(row) for row in M), tuple(pivots)


def rank(A: Matrix) -> int:
    """Rank of ``A``: Bareiss elimination in exact mode, pivoted RREF in float mode."""
    if A.nrows == 0 or A.ncols == 0:
        return 0
    if A.arith.exact:
        return _bareiss_rank(A)
    return len(rref(A)[1])


def solve_consistent(A: Matrix, b: Sequence) -> tuple | None:
    """Some ``x`` with ``A x = b`` (free variables set to zero), or None if inconsistent."""
    if len(b) != A.nrows:
        raise DimensionMismatchError(f"right-hand side has length {len(b)}, expected {A.nrows}")
    arith = A.arith
    b = tuple(arith.coerce(x) for x in b)
    R, pivots = rref(A.augment(b))
    if pivots and pivots[-1] == A.ncols:
        return None
    x = [arith.zero] * A.ncols
    for row, col in enumerate(pivots):
        x[col] = R[row][A.ncols]
    return tuple(x)


def nullspace_basis(A: Matrix) -> Matrix:
    """Columns spanning ``ker A``: one per free column of the RREF."""
    arith = A.arith
    n = A.ncols
    if A.nrows == 0:
        return Matrix.identity(n, arith)
    R, pivots = rref(A)
    pivot_set = set(pivots)
    cols = []
    for f in range(n):
        if f in pivot_set:
            continue
        v = [arith.zero] * n
        v[f] = arith.one
        for row, p in enumerate(pivots):
            v[p] = -R[row][f]
        cols.append(tuple(v))
    return Matrix.from_columns(cols, n, arith)


def gram_projection(B: Matrix, u: Sequence) -> tuple:
    """Orthogonal projection of ``u`` onto the column span of ``B``.

    Computes ``B (B* B)^-1 B* u``. Raises SingularGramError if the columns
    of ``B`` are dependent.
    """
    arith = B.arith
    if len(u) != B.nrows:
        raise DimensionMismatchError(f"vector of length {len(u)} vs {B.nrows} rows")
    u = tuple(arith.coerce(x) for x in u)
    if B.ncols == 0:
        return tuple(arith.zero for _ in u)
    Bh = B.conjugate_transpose()
    G = Bh @ B
    if rank(G) < B.ncols:
        raise SingularGramError("basis columns are linearly dependent")
    x = solve_consistent(G, mat_vec(Bh, u))
    return mat_vec(B, x)
