"""Seeded generators of small exact instances shared by the property tests."""

import random
from fractions import Fraction

from valentropy import Scalar, StateVector, Subspace, rank, Matrix


def random_scalar(rng: random.Random, complex_prob: float = 0.15) -> Scalar:
    re = Fraction(rng.randint(-3, 3), rng.choice([1, 1, 1, 2, 3]))
    im = Fraction(rng.randint(-2, 2), rng.choice([1, 2])) if rng.random() < complex_prob else 0
    return Scalar(re, im)


def random_vector(rng, n, zero_prob=0.35, complex_prob=0.15):
    return tuple(
        Scalar(0) if rng.random() < zero_prob else random_scalar(rng, complex_prob)
        for _ in range(n)
    )


def random_subspace(rng, n, k, complex_prob=0.15) -> Subspace:
    """A subspace of exactly dimension k (resampled until independent)."""
    while True:
        vecs = [random_vector(rng, n, complex_prob=complex_prob) for _ in range(k)]
        if k == 0 or rank(Matrix.from_columns(vecs, n)) == k:
            return Subspace(vecs, n)


def combine(rng, basis, n):
    """A random combination of basis vectors (zero if the basis is empty)."""
    out = [Scalar(0)] * n
    for b in basis:
        c = random_scalar(rng)
        out = [x + c * y for x, y in zip(out, b)]
    return out


def random_state(rng, P: Subspace) -> StateVector:
    """Mix of states inside P, inside its complement, and generic ones."""
    n = P.ambient_dim
    mode = rng.random()
    Q = P.orthocomplement()
    for _ in range(50):
        if mode < 0.2:
            v = combine(rng, P.basis, n)
        elif mode < 0.4:
            v = combine(rng, Q.basis, n)
        elif mode < 0.6:
            v = [x + y for x, y in zip(combine(rng, P.basis, n), combine(rng, Q.basis, n))]
        else:
            v = random_vector(rng, n)
        if any(v):
            return StateVector(v)
        mode = 1.0
    raise AssertionError("could not draw a nonzero state")


def random_instance(rng, dims=range(2, 7)):
    n = rng.choice(list(dims))
    k = rng.randint(0, n)
    P = random_subspace(rng, n, k)
    return random_state(rng, P), P


def random_nonzero_scalar(rng):
    while True:
        c = random_scalar(rng, complex_prob=0.5)
        if c:
            return c


def rebasis(rng, P: Subspace) -> Subspace:
    """Same span, different presentation: an invertible recombination of the basis."""
    k, n = P.dim, P.ambient_dim
    if k == 0:
        return Subspace([[0] * n], n)
    while True:
        C = [[random_scalar(rng, 0.3) for _ in range(k)] for _ in range(k)]
        if rank(Matrix(C)) == k:
            break
    vecs = [
        tuple(sum((C[j][i] * P.basis[j][r] for j in range(k)), Scalar(0)) for r in range(n))
        for i in range(k)
    ]
    # pad with a dependent vector to exercise the reduction
    vecs.append(tuple(a + b for a, b in zip(vecs[0], vecs[-1])))
    rng.shuffle(vecs)
    return Subspace(vecs, n)
