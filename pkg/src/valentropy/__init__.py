"""Valuational entropy of the membership predicate between states and subspaces."""

from .dynamics import (
    PropositionSet,
    Tag,
    TransitionClass,
    TransitionReport,
    apply_matrix,
    classify_transition,
    delta_entropy,
    delta_entropy_exact,
    entropy_trajectory,
    find_indeterminate_subspace,
    is_scaled_unitary,
    projective_collapse,
)
from .errors import (
    DimensionCapError,
    DimensionMismatchError,
    OrthogonalStateError,
    PatternError,
    PatternSyntaxError,
    SingularGramError,
    SingularMatrixError,
    ValentropyError,
    ZeroStateError,
)
from .linalg import Matrix, gram_projection, nullspace_basis, rank, solve_consistent
from .membership import (
    EntropyReport,
    LogValue,
    MatchResult,
    StateVector,
    TruthValue,
    born_degree_of_truth,
    brute_force_match_counts,
    entropy_from_counts,
    evaluate,
    feasible_index_set,
    max_match_counts,
    predicate_entropy,
    predicate_entropy_exact,
    shannon_binary_entropy,
    truth_value,
)
from .pattern import PatternVector, parse_pattern
from .scalar import EXACT, FloatArithmetic, Scalar, parse_scalar
from .scenario import Scenario, load_scenario
from .subspace import Subspace, contains_vector, orthocomplement, subspace_from_pattern

__version__ = "0.1.0"
