"""Markov bases, pure decompositions and complete-intersection tests for lattice ideals."""

from .binomial import Binomial
from .ci import CIReport, ci_certificate_check, is_binomial_ci, is_mixed_dominating, is_mixed_row
from .errors import (
    DimensionError,
    FiberTooLargeError,
    LatmarkError,
    NoPureElementsError,
    NotInLatticeError,
    NotPositivelyGradedError,
    NotPrimitiveError,
    ParseError,
)
from .graded import (
    Fiber,
    FiberGraph,
    GraverBasis,
    enumerate_fiber,
    graver_basis,
    indispensables_graded,
    markov_basis_graded,
    spath_connected,
)
from .lattice import (
    Lattice,
    SmithInvariants,
    canonicalize,
    extend_to_basis,
    is_member,
    lattices_equal,
    primitive_scale,
    smith_invariants,
)
from .pure import (
    DecompositionReport,
    decompose,
    hilbert_basis_positive,
    projected_lattice,
    pure_markov_basis,
    pure_positive_basis,
    pure_sublattice,
    pure_witness,
    support_sigma,
    verify_pure_markov,
)
from .synthesis import (
    INFINITE,
    ClassDescriptor,
    FiberDescriptor,
    MarkovReport,
    class_cardinality,
    class_leq,
    fiber_descriptor,
    indispensables_general,
    lift_binomial,
    markov_basis_general,
    universal_markov_finite,
    verify_generating_set,
    verify_markov_general,
)

__version__ = "0.1.0"

__all__ = [
    "Binomial",
    "CIReport",
    "ClassDescriptor",
    "DecompositionReport",
    "DimensionError",
    "Fiber",
    "FiberDescriptor",
    "FiberGraph",
    "FiberTooLargeError",
    "GraverBasis",
    "INFINITE",
    "LatmarkError",
    "Lattice",
    "MarkovReport",
    "NoPureElementsError",
    "NotInLatticeError",
    "NotPositivelyGradedError",
    "NotPrimitiveError",
    "ParseError",
    "SmithInvariants",
    "canonicalize",
    "ci_certificate_check",
    "class_cardinality",
    "class_leq",
    "decompose",
    "enumerate_fiber",
    "extend_to_basis",
    "fiber_descriptor",
    "graver_basis",
    "hilbert_basis_positive",
    "indispensables_general",
    "indispensables_graded",
    "is_binomial_ci",
    "is_member",
    "is_mixed_dominating",
    "is_mixed_row",
    "lattices_equal",
    "lift_binomial",
    "markov_basis_general",
    "markov_basis_graded",
    "primitive_scale",
    "projected_lattice",
    "pure_markov_basis",
    "pure_positive_basis",
    "pure_sublattice",
    "pure_witness",
    "smith_invariants",
    "spath_connected",
    "support_sigma",
    "universal_markov_finite",
    "verify_generating_set",
    "verify_markov_general",
    "verify_pure_markov",
]
