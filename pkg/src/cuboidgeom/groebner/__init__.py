"""Groebner bases, local standard bases and zero-dimensional solving."""

from ._kernel import BudgetExceeded, GroebnerError
from .buchberger import (
    GBCertificate,
    GroebnerBasis,
    Ideal,
    LocalOrderRejected,
    buchberger,
    eliminate,
    ideal_contains,
    is_groebner_basis,
    normal_form,
    reduce_by_basis,
)
from .mora import (
    DEFAULT_BUDGET,
    METHODS,
    HomogenizedOrder,
    LazardState,
    MoraState,
    NotIsolated,
    StandardBasis,
    jacobian_ideal,
    local_quotient_dimension,
    milnor_number,
    mora_normal_form,
    mora_standard_basis,
    lazard_standard_basis,
    standard_basis,
)
from .tower import BadPrime, TowerEvidence, tower_splitting_evidence
from .zerodim import (
    NotZeroDimensional,
    ShapeFailed,
    SolvedSystem,
    Staircase,
    quotient_dimension,
    shape_position_solve,
    staircase_of,
    verify_solution,
)

__all__ = [
    "BadPrime", "BudgetExceeded", "DEFAULT_BUDGET", "GBCertificate", "GroebnerBasis", "GroebnerError",
    "Ideal", "LocalOrderRejected", "MoraState", "NotIsolated", "NotZeroDimensional", "ShapeFailed",
    "SolvedSystem", "StandardBasis", "Staircase", "TowerEvidence", "buchberger", "eliminate",
    "ideal_contains", "is_groebner_basis", "jacobian_ideal", "local_quotient_dimension",
    "milnor_number", "mora_normal_form", "mora_standard_basis", "lazard_standard_basis", "standard_basis",
    "HomogenizedOrder", "LazardState", "METHODS", "normal_form", "quotient_dimension",
    "reduce_by_basis", "shape_position_solve", "staircase_of", "tower_splitting_evidence",
    "verify_solution",
]
