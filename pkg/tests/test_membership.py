import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from valentropy import (
    LogValue, StateVector, Subspace, TruthValue, born_degree_of_truth,
    brute_force_match_counts, entropy_from_counts, evaluate, feasible_index_set,
    max_match_counts, orthocomplement, predicate_entropy, predicate_entropy_exact,
    shannon_binary_entropy, subspace_from_pattern, truth_value,
)
from valentropy.errors import DimensionCapError, DimensionMismatchError, ZeroStateError
from valentropy.scalar import FloatArithmetic, Scalar

import oracle
from instances import random_instance, random_nonzero_scalar, rebasis

S = Scalar
PSI1 = StateVector([1, 0, 0, 0])
P1 = subspace_from_pattern("[a,0,0,0]")
P2 = subspace_from_pattern("[0,a,0,0]")
P3 = subspace_from_pattern("[a,a,a,a]")
P4 = subspace_from_pattern("[a,a,0,0]")
Z_PLUS = StateVector([1, 0])
Z_MINUS = StateVector([0, 1])
X_PLUS = StateVector([1, 1])
XP = subspace_from_pattern("[a,a]")
ZP = subspace_from_pattern("[a,0]")
ZM = subspace_from_pattern("[0,a]")


def test_state_rejects_zero_vector():
    with pytest.raises(ZeroStateError):
        StateVector([0, 0])


def test_match_counts_two_qubit():
    mr = max_match_counts(PSI1, P3)
    assert (mr.m_in, mr.m_out) == (1, 3)
    # smallest-lexicographic maximal support: positions 1,2,3 with q = (1,0,0,-1)
    assert mr.support_out == (0, 1, 2)
    assert mr.witness_out == (S(1), S(0), S(0), S(-1))
    # (psi1, P4): frozen from the sympy oracle
    mr = max_match_counts(PSI1, P4)
    assert (mr.m_in, mr.m_out) == (3, 3)


def test_match_counts_state_in_subspace():
    mr = max_match_counts(Z_PLUS, ZP)
    assert (mr.m_in, mr.m_out) == (2, 0)
    assert mr.witness_in == (S(1), S(0))


def test_match_counts_three_dim_example():
    P = Subspace([(1, 0, 0), (0, 0, 1)], 3)
    u = StateVector([1, 1, 0])
    for f in (max_match_counts, brute_force_match_counts):
        mr = f(u, P)
        assert (mr.m_in, mr.m_out) == (2, 2)
        assert mr.witness_in == (S(1), S(0), S(0))
        assert mr.witness_out == (S(0), S(1), S(0))


def test_zero_subspace_has_no_witness():
    mr = max_match_counts(PSI1, Subspace.zero(4))
    assert mr.m_in == 0 and mr.witness_in is None
    assert mr.m_out == 4


def test_feasible_index_set_examples():
    P3p = orthocomplement(P3)
    assert feasible_index_set(PSI1, P3p, [0, 2, 3]) == (S(1), S(-1), S(0), S(0))
    assert feasible_index_set(PSI1, P3, [0, 1]) is None
    q = feasible_index_set(PSI1, P3, [])
    assert q is not None and any(q) and P3.contains(q)
    assert feasible_index_set(PSI1, Subspace.zero(4), []) is None
    with pytest.raises(IndexError):
        feasible_index_set(PSI1, P3, [4])


def test_entropy_examples():
    assert predicate_entropy(PSI1, P3) == pytest.approx(2 - 0.75 * math.log2(3), abs=1e-12)
    assert predicate_entropy_exact(PSI1, P3) == entropy_from_counts(4, 3)
    assert predicate_entropy(Z_PLUS, XP) == 1.0
    assert predicate_entropy(X_PLUS, XP) == 0.0
    assert predicate_entropy(PSI1, P3, base="e") == pytest.approx(
        math.log(4) - 0.75 * math.log(3), abs=1e-12)
    with pytest.raises(ValueError):
        predicate_entropy(PSI1, P3, base=1)


def test_truth_examples():
    assert truth_value(PSI1, P1) is TruthValue.TRUE
    assert truth_value(PSI1, P2) is TruthValue.FALSE
    assert truth_value(PSI1, P3) is TruthValue.INDETERMINATE
    assert truth_value(PSI1, P4) is TruthValue.INDETERMINATE


def test_born_examples():
    assert born_degree_of_truth(Z_PLUS, ZP) == 1
    assert born_degree_of_truth(Z_PLUS, XP) == Fraction(1, 2)
    assert born_degree_of_truth(PSI1, P3) == Fraction(1, 4)
    assert born_degree_of_truth(PSI1, Subspace.zero(4)) == 0


def test_shannon_examples():
    assert shannon_binary_entropy(Fraction(1, 2)) == 1.0
    assert shannon_binary_entropy(0) == 0.0
    assert shannon_binary_entropy(1) == 0.0
    assert shannon_binary_entropy(Fraction(1, 4)) == pytest.approx(2 - 0.75 * math.log2(3), abs=1e-12)
    with pytest.raises(ValueError):
        shannon_binary_entropy(Fraction(3, 2))


def test_evaluate_report():
    r = evaluate(PSI1, P3)
    assert r.truth is TruthValue.INDETERMINATE
    assert (r.n, r.m) == (4, 3)
    assert r.h_max == 2.0
    assert r.born == Fraction(1, 4)
    # numerically equal to the entropy here; an observation, not a law
    assert r.shannon == pytest.approx(r.entropy, abs=1e-12)


def test_dimension_errors():
    with pytest.raises(DimensionMismatchError):
        max_match_counts(Z_PLUS, P3)
    big = Subspace([[1] * 17], 17)
    with pytest.raises(DimensionCapError):
        max_match_counts(StateVector([1] * 17), big)
    with pytest.raises(DimensionCapError):
        brute_force_match_counts(StateVector([1] * 13), Subspace([[1] * 13], 13))


def test_log_value_arithmetic():
    two = LogValue.log(2)
    assert two * 2 == LogValue.log(4)
    assert -two == LogValue.log(Fraction(1, 2))
    assert entropy_from_counts(2, 1) == two
    assert entropy_from_counts(2, 0) == two  # 0 log 0 = 1 log 1 = 0
    assert entropy_from_counts(4, 4).is_zero
    assert (entropy_from_counts(4, 3) - entropy_from_counts(4, 1)).sign < 0
    # log 4 - (2/4) log 2 = (3/2) log 2
    assert entropy_from_counts(4, 2) == LogValue(Fraction(8), 2)
    assert entropy_from_counts(4, 2).value(2) == pytest.approx(1.5)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_search_agrees_with_sympy_oracle(seed):
    u, P = random_instance(random.Random(seed), dims=range(1, 5))
    mr = max_match_counts(u, P)
    assert (mr.m_in, mr.m_out) == oracle.match_counts(u, P)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_born_agrees_with_sympy_oracle(seed):
    u, P = random_instance(random.Random(seed), dims=range(1, 5))
    assert born_degree_of_truth(u, P) == Fraction(str(oracle.born(u, P)))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_witnesses_are_exact(seed):
    u, P = random_instance(random.Random(seed), dims=range(2, 6))
    mr = max_match_counts(u, P)
    for W, m, supp, side in [(P, mr.m_in, mr.support_in, mr.witness_in),
                             (orthocomplement(P), mr.m_out, mr.support_out, mr.witness_out)]:
        if W.dim == 0:
            assert side is None and m == 0
            continue
        assert any(side) and W.contains(side)
        agree = tuple(i for i in range(u.dim) if side[i] == u[i])
        assert agree == supp and len(supp) == m


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_ray_and_basis_invariance(seed):
    rng = random.Random(seed)
    u, P = random_instance(rng, dims=range(2, 6))
    c = random_nonzero_scalar(rng)
    R = rebasis(rng, P)
    base = max_match_counts(u, P)
    for v, Q in [(u.scaled(c), P), (u, R)]:
        mr = max_match_counts(v, Q)
        assert (mr.m_in, mr.m_out) == (base.m_in, base.m_out)
        assert truth_value(v, Q) is truth_value(u, P)
        assert born_degree_of_truth(v, Q) == born_degree_of_truth(u, P)
        assert predicate_entropy_exact(v, Q) == predicate_entropy_exact(u, P)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_complement_symmetry_and_zero_law(seed):
    u, P = random_instance(random.Random(seed), dims=range(2, 6))
    h = predicate_entropy_exact(u, P)
    assert h == predicate_entropy_exact(u, orthocomplement(P))
    tv = truth_value(u, P)
    born = born_degree_of_truth(u, P)
    assert h.is_zero == tv.determinate == (born in (0, 1))
    assert (tv is TruthValue.TRUE) == P.contains(u)
    assert (tv is TruthValue.FALSE) == orthocomplement(P).contains(u)
    n = P.ambient_dim
    assert h in {entropy_from_counts(n, m) for m in range(n + 1)}
    assert 0 <= h.value(2) <= math.log2(n) + 1e-12
    if n == 2 and not h.is_zero:
        assert h == LogValue.log(2)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_downward_closure(seed):
    rng = random.Random(seed)
    u, P = random_instance(rng, dims=range(2, 6))
    mr = max_match_counts(u, P)
    supp = mr.support_in
    sub = [i for i in supp if rng.random() < 0.5]
    if P.dim:
        q = feasible_index_set(u, P, sub)
        assert q is not None
        assert all(q[i] == u[i] for i in sub)
        # the maximal witness also serves every subset
        assert all(mr.witness_in[i] == u[i] for i in sub)


def test_float_mode_matches_exact_on_irrational_ray():
    fa = FloatArithmetic(1e-9)
    h = 2 ** -0.5
    x_plus = StateVector([h, h], fa)
    XPf = XP.with_arithmetic(fa)
    assert truth_value(x_plus, XPf) is TruthValue.TRUE
    assert predicate_entropy(x_plus, ZP.with_arithmetic(fa)) == 1.0
    assert born_degree_of_truth(x_plus, ZP.with_arithmetic(fa)) == pytest.approx(0.5)


@settings(max_examples=12, deadline=None)
@given(st.integers(0, 10**6))
def test_pruned_search_matches_exhaustive_at_larger_n(seed):
    u, P = random_instance(random.Random(seed), dims=range(7, 10))
    fast = max_match_counts(u, P)
    slow = brute_force_match_counts(u, P)
    assert fast == slow


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_float_search_matches_exact_search(seed):
    u, P = random_instance(random.Random(seed), dims=range(2, 7))
    fa = FloatArithmetic(1e-9)
    exact = max_match_counts(u, P)
    approx = max_match_counts(u.with_arithmetic(fa), P.with_arithmetic(fa))
    assert (approx.m_in, approx.m_out) == (exact.m_in, exact.m_out)
    assert (approx.support_in, approx.support_out) == (exact.support_in, exact.support_out)
