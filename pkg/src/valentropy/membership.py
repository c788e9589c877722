"""Match counts, valuational entropy and truth values for a (state, subspace) pair.

For a state ``u`` and subspace ``P`` in dimension N, the in-count is the
largest number of index positions at which ``u`` agrees with some nonzero
``q`` in ``P`` (a global nonzero rescaling of ``u`` is free, so it is folded
into ``q``); the out-count is the same against ``P``'s orthocomplement.
With ``m = max(in, out)`` the entropy is ``log N - (m/N) log m``.

Indices are 0-based throughout the Python API.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionCapError, DimensionMismatchError, ZeroStateError
from .linalg import Matrix, gram_projection, mat_vec, nullspace_basis, solve_consistent
from .scalar import EXACT
from .subspace import Subspace, contains_vector, orthocomplement

__all__ = [
    "StateVector",
    "TruthValue",
    "MatchResult",
    "LogValue",
    "EntropyReport",
    "MAX_SEARCH_DIM",
    "MAX_BRUTE_FORCE_DIM",
    "feasible_index_set",
    "max_match_counts",
    "brute_force_match_counts",
    "entropy_from_counts",
    "predicate_entropy",
    "predicate_entropy_exact",
    "truth_value",
    "born_degree_of_truth",
    "shannon_binary_entropy",
    "evaluate",
    "log_base",
]

MAX_SEARCH_DIM = 16
MAX_BRUTE_FORCE_DIM = 12


class StateVector:
    """A nonzero vector standing for the ray it spans."""

    __slots__ = ("components", "arith")

    def __init__(self, components: Iterable, arith=EXACT):
        comps = tuple(arith.coerce(x) for x in components)
        if not comps:
            raise DimensionMismatchError("a state needs at least one component")
        if all(arith.is_zero(x) for x in comps):
            raise ZeroStateError("the zero vector is not a state")
        self.components = comps
        self.arith = arith

    @property
    def dim(self) -> int:
        return len(self.components)

    def scaled(self, c) -> "StateVector":
        c = self.arith.coerce(c)
        return StateVector([c * x for x in self.components], self.arith)

    def with_arithmetic(self, arith) -> "StateVector":
        if arith == self.arith:
            return self
        return StateVector(self.components, arith)

    def same_ray(self, other: "StateVector") -> bool:
        """True if the two vectors are nonzero multiples of each other."""
        if self.dim != other.dim:
            return False
        S = Subspace([self.components], self.dim, self.arith)
        return contains_vector(S, other.components)

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, StateVector):
            return NotImplemented
        eq = self.arith.eq
        return self.dim == other.dim and all(
            eq(x, y) for x, y in zip(self.components, other.components)
        )

    def __hash__(self) -> int:
        return hash(self.components) if self.arith.exact else hash(self.dim)

    def __repr__(self) -> str:
        return "StateVector([" + ", ".join(self.arith.format(x) for x in self.components) + "])"


class TruthValue(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    INDETERMINATE = "indeterminate"

    @property
    def determinate(self) -> bool:
        return self is not TruthValue.INDETERMINATE

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class MatchResult:
    """Maximal match counts against a subspace and its orthocomplement.

    ``support_in``/``support_out`` are the lexicographically smallest
    maximal index sets; the witnesses are nonzero members of the subspace
    (resp. complement) agreeing with the state on exactly those positions.
    A witness is None only for a zero-dimensional side.
    """

    m_in: int
    m_out: int
    witness_in: tuple | None
    witness_out: tuple | None
    support_in: tuple[int, ...] = ()
    support_out: tuple[int, ...] = ()

    @property
    def m(self) -> int:
        return max(self.m_in, self.m_out)


def log_base(base) -> float:
    """Natural log of a base given as a number > 1 or the token ``"e"``."""
    if isinstance(base, str):
        if base == "e":
            return 1.0
        base = Fraction(base)
    if not base > 1:
        raise ValueError(f"logarithm base must exceed 1, got {base}")
    return math.log(base)


def _ln(x: Fraction) -> float:
    return math.log(x.numerator) - math.log(x.denominator)


def _self_power(m: int) -> int:
    # m**m with 0**0 := 1, matching the 0 log 0 := 0 convention
    return m**m if m else 1


@dataclass(frozen=True)
class LogValue:
    """The exact real number ``log(argument) / divisor`` (positive rational argument).

    Entropies have this form with ``argument = N**N / m**m`` and
    ``divisor = N``, so equality and sign are decidable without floats.
    """

    argument: Fraction
    divisor: int = 1

    def __post_init__(self):
        if self.argument <= 0 or self.divisor <= 0:
            raise ValueError("LogValue needs a positive argument and divisor")

    @classmethod
    def log(cls, x) -> "LogValue":
        return cls(Fraction(x), 1)

    def _common(self, other: "LogValue") -> tuple[Fraction, Fraction, int]:
        L = math.lcm(self.divisor, other.divisor)
        return self.argument ** (L // self.divisor), other.argument ** (L // other.divisor), L

    def __sub__(self, other: "LogValue") -> "LogValue":
        a, b, L = self._common(other)
        return LogValue(a / b, L)

    def __add__(self, other: "LogValue") -> "LogValue":
        a, b, L = self._common(other)
        return LogValue(a * b, L)

    def __neg__(self) -> "LogValue":
        return LogValue(1 / self.argument, self.divisor)

    def __mul__(self, k: int) -> "LogValue":
        if not isinstance(k, int):
            return NotImplemented
        if k >= 0:
            return LogValue(self.argument**k, self.divisor)
        return LogValue((1 / self.argument) ** (-k), self.divisor)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, LogValue):
            return NotImplemented
        a, b, _ = self._common(other)
        return a == b

    def __hash__(self) -> int:
        return hash(self.value("e"))

    def __lt__(self, other: "LogValue") -> bool:
        a, b, _ = self._common(other)
        return a < b

    def __le__(self, other: "LogValue") -> bool:
        a, b, _ = self._common(other)
        return a <= b

    @property
    def sign(self) -> int:
        return (self.argument > 1) - (self.argument < 1)

    @property
    def is_zero(self) -> bool:
        return self.argument == 1

    def value(self, base=2) -> float:
        if self.argument == 1:
            return 0.0
        return _ln(self.argument) / self.divisor / log_base(base)


@dataclass(frozen=True)
class EntropyReport:
    truth: TruthValue
    matches: MatchResult
    entropy: float
    exact_entropy: LogValue
    h_max: float
    born: Fraction | float
    shannon: float
    base: object = 2

    @property
    def n(self) -> int:
        return self.exact_entropy.divisor

    @property
    def m(self) -> int:
        return self.matches.m


def _check(u, P: Subspace) -> tuple[tuple, object]:
    if not isinstance(u, StateVector):
        u = StateVector(u, P.arith)
    if u.dim != P.ambient_dim:
        raise DimensionMismatchError(
            f"state of dimension {u.dim} vs subspace in dimension {P.ambient_dim}"
        )
    if u.arith != P.arith:
        raise ValueError("state and subspace use different arithmetic")
    return u.components, P.arith


def _witness(u: tuple, basis: Matrix, S: Sequence[int]):
    """Nonzero q in span(basis) with q_i = u_i on S, or None."""
    arith = basis.arith
    k = basis.ncols
    if k == 0:
        return None
    if not S:
        return basis.column(0)
    B_S = basis.select_rows(S)
    u_S = tuple(u[i] for i in S)
    if any(not arith.is_zero(x) for x in u_S):
        x = solve_consistent(B_S, u_S)
        if x is None:
            return None
    else:
        K = nullspace_basis(B_S)
        if K.ncols == 0:
            return None
        x = K.column(0)
    return mat_vec(basis, x)


def feasible_index_set(u, P: Subspace, S: Iterable[int]):
    """A nonzero ``q`` in ``P`` with ``q[i] == u[i]`` for every ``i`` in ``S``, else None.

    If ``u`` restricted to ``S`` is nonzero this is the consistency test
    ``rank(B_S) == rank([B_S | u_S])``; if it is zero, a nonzero kernel
    element of ``B_S`` is needed. The empty set is feasible iff dim P >= 1.
    """
    comps, _ = _check(u, P)
    S = tuple(sorted(set(S)))
    if S and (S[0] < 0 or S[-1] >= P.ambient_dim):
        raise IndexError(f"index set {S} out of range for dimension {P.ambient_dim}")
    return _witness(comps, P.matrix, S)


class _Solutions:
    """Solution set ``{x : B_S x = u_S}`` as ``x0 + span(K)`` for a growing index set S."""

    __slots__ = ("x0", "K")

    def __init__(self, x0: list, K: list[list]):
        self.x0 = x0
        self.K = K

    def feasible(self, arith) -> bool:
        # nonzero x <=> nonzero q = B x, since B has independent columns
        return bool(self.K) or any(not arith.is_zero(v) for v in self.x0)

    def extend(self, row: tuple, target, arith) -> "_Solutions | None":
        """Add the constraint ``row . x = target``; None if inconsistent."""
        zero = arith.zero
        r0 = zero
        for a, v in zip(row, self.x0):
            r0 = r0 + a * v
        resid = target - r0
        coeffs = []
        for col in self.K:
            c = zero
            for a, v in zip(row, col):
                c = c + a * v
            coeffs.append(c)
        nz = [j for j, c in enumerate(coeffs) if not arith.is_zero(c)]
        if not nz:
            return self if arith.is_zero(resid) else None
        j = nz[0] if arith.exact else max(nz, key=lambda t: arith.abs2(coeffs[t]))
        piv = self.K[j]
        f = resid / coeffs[j]
        x0 = [v + f * p for v, p in zip(self.x0, piv)]
        K = []
        for l, col in enumerate(self.K):
            if l == j:
                continue
            g = coeffs[l] / coeffs[j]
            K.append(col if arith.is_zero(g) else [v - g * p for v, p in zip(col, piv)])
        return _Solutions(x0, K)


def _search(u: tuple, basis: Matrix) -> tuple[int, tuple | None, tuple[int, ...]]:
    """Largest index set (smallest lexicographic among ties) admitting a witness.

    Depth-first over index sets in lexicographic order. Feasible sets are
    closed under subsets, so an infeasible prefix cuts its whole subtree;
    branches that cannot beat the best size so far are cut too.
    """
    n = len(u)
    k = basis.ncols
    if k == 0:
        return 0, None, ()
    arith = basis.arith
    rows = basis.rows
    root = _Solutions([arith.zero] * k, [[arith.one if i == j else arith.zero for i in range(k)]
                                          for j in range(k)])
    best: list = [0, ()]

    def dfs(start: int, S: tuple, sol: _Solutions) -> None:
        if len(S) > best[0]:
            best[0], best[1] = len(S), S
            if len(S) == n:
                return
        for i in range(start, n):
            if len(S) + (n - i) <= best[0]:
                return
            nxt = sol.extend(rows[i], u[i], arith)
            if nxt is not None and nxt.feasible(arith):
                dfs(i + 1, S + (i,), nxt)

    dfs(0, (), root)
    S = best[1]
    return len(S), _witness(u, basis, S), S


def max_match_counts(u, P: Subspace) -> MatchResult:
    """Maximal match counts of ``u`` against ``P`` and against ``P``'s orthocomplement.

    The reported supports are the smallest-lexicographic maximal index sets.
    """
    comps, _ = _check(u, P)
    if P.ambient_dim > MAX_SEARCH_DIM:
        raise DimensionCapError(
            f"dimension {P.ambient_dim} exceeds the match-search cap of {MAX_SEARCH_DIM}"
        )
    m_in, w_in, s_in = _search(comps, P.matrix)
    m_out, w_out, s_out = _search(comps, orthocomplement(P).matrix)
    return MatchResult(m_in, m_out, w_in, w_out, s_in, s_out)


def _brute(u: tuple, basis: Matrix):
    n = len(u)
    best: tuple[int, tuple[int, ...], tuple | None] = (0, (), None)
    for mask in range(1 << n):
        S = tuple(i for i in range(n) if mask >> i & 1)
        q = _witness(u, basis, S)
        if q is None:
            continue
        if len(S) > best[0] or (len(S) == best[0] and (best[2] is None or S < best[1])):
            best = (len(S), S, q)
    return best


def brute_force_match_counts(u, P: Subspace) -> MatchResult:
    """Reference version of :func:`max_match_counts`: all ``2**N`` index sets, no pruning."""
    comps, _ = _check(u, P)
    if P.ambient_dim > MAX_BRUTE_FORCE_DIM:
        raise DimensionCapError(
            f"dimension {P.ambient_dim} exceeds the brute-force cap of {MAX_BRUTE_FORCE_DIM}"
        )
    m_in, s_in, w_in = _brute(comps, P.matrix)
    m_out, s_out, w_out = _brute(comps, orthocomplement(P).matrix)
    return MatchResult(m_in, m_out, w_in, w_out, s_in, s_out)


def entropy_from_counts(n: int, m: int) -> LogValue:
    """``log N - (m/N) log m`` as ``log(N**N / m**m) / N``."""
    if not 0 <= m <= n or n < 1:
        raise ValueError(f"need 0 <= m <= N and N >= 1, got N={n}, m={m}")
    return LogValue(Fraction(n**n, _self_power(m)), n)


def predicate_entropy_exact(u, P: Subspace) -> LogValue:
    mr = max_match_counts(u, P)
    return entropy_from_counts(P.ambient_dim, mr.m)


def predicate_entropy(u, P: Subspace, base=2) -> float:
    """Valuational entropy of "u is in P" in units of log base ``base``."""
    log_base(base)
    return predicate_entropy_exact(u, P).value(base)


def _truth_from(mr: MatchResult, n: int) -> TruthValue:
    if mr.m_in == n:
        return TruthValue.TRUE
    if mr.m_out == n:
        return TruthValue.FALSE
    return TruthValue.INDETERMINATE


def truth_value(u, P: Subspace) -> TruthValue:
    return _truth_from(max_match_counts(u, P), P.ambient_dim)


def born_degree_of_truth(u, P: Subspace):
    """Squared projection fraction ``|proj_P u|^2 / |u|^2``.

    Exact mode returns a Fraction, float mode a float. Zero for the zero subspace.
    """
    comps, arith = _check(u, P)
    if P.dim == 0:
        return Fraction(0) if arith.exact else 0.0
    proj = gram_projection(P.matrix, comps)
    num = sum((arith.abs2(x) for x in proj), Fraction(0) if arith.exact else 0.0)
    den = sum((arith.abs2(x) for x in comps), Fraction(0) if arith.exact else 0.0)
    p = num / den
    if not arith.exact:
        # snap the ends so the zero-entropy correspondence holds under tolerance
        if p <= arith.eps:
            return 0.0
        if p >= 1 - arith.eps:
            return 1.0
    return p


def shannon_binary_entropy(p, base=2) -> float:
    """``-p log p - (1-p) log(1-p)`` with ``0 log 0 = 0``."""
    if not 0 <= p <= 1:
        raise ValueError(f"probability outside [0, 1]: {p}")
    lb = log_base(base)
    total = 0.0
    for x in (p, 1 - p):
        if x:
            total -= float(x) * math.log(x) / lb
    return total + 0.0


def evaluate(u, P: Subspace, base=2) -> EntropyReport:
    """Everything known about one (state, subspace) pair."""
    _check(u, P)
    n = P.ambient_dim
    mr = max_match_counts(u, P)
    h = entropy_from_counts(n, mr.m)
    born = born_degree_of_truth(u, P)
    return EntropyReport(
        truth=_truth_from(mr, n),
        matches=mr,
        entropy=h.value(base),
        exact_entropy=h,
        h_max=entropy_from_counts(n, 0).value(base),
        born=born,
        shannon=shannon_binary_entropy(born, base),
        base=base,
    )
