"""Cyclic decompositions of the maximal tori of the even spin groups,
computed along two independent routes: a closed-form case analysis of
the signed cycle type, and Smith normal form of the twisted action on
the weight lattice.
"""

from .permutations import (
    FORM_MINUS,
    FORM_PLUS,
    SignedCycleType,
    SignedPermutation,
    TorusClass,
    conjugate,
    cycle_type,
    enumerate_classes,
    representative,
    standard_representative,
)
from .matrices import (
    MatrixFormatError,
    PipelineDegenerateError,
    format_matrix_text,
    parse_matrix_text,
    reduced_form_identity,
    reduced_torus_matrix,
    torus_matrix,
    transition_matrix,
    weight_action_matrix,
)
from .smith import (
    AbelianInvariants,
    SnfResult,
    abelian_invariants,
    determinant,
    diagonalization_witnesses,
    invariant_factors,
    smith_normal_form,
    xgcd,
)
from .tori import (
    CyclicFactor,
    GroupForm,
    TorusDecomposition,
    alternative_decomposition,
    canonical_invariants,
    center_invariants,
    closed_form_decomposition,
    display_factors,
    embeds,
    evaluate,
    exchange_identity_check,
    gcd_doubling_check,
    is_prime_power,
    oracle_invariants,
    power_gcd_closed_form,
    power_two_part,
    symbolic_decomposition,
    torus_order,
    two_part,
)

__version__ = "0.1.0"

__all__ = [
    "FORM_MINUS",
    "FORM_PLUS",
    "SignedCycleType",
    "SignedPermutation",
    "TorusClass",
    "conjugate",
    "cycle_type",
    "enumerate_classes",
    "representative",
    "standard_representative",
    "MatrixFormatError",
    "PipelineDegenerateError",
    "format_matrix_text",
    "parse_matrix_text",
    "reduced_form_identity",
    "reduced_torus_matrix",
    "torus_matrix",
    "transition_matrix",
    "weight_action_matrix",
    "AbelianInvariants",
    "SnfResult",
    "abelian_invariants",
    "determinant",
    "diagonalization_witnesses",
    "invariant_factors",
    "smith_normal_form",
    "xgcd",
    "CyclicFactor",
    "GroupForm",
    "TorusDecomposition",
    "alternative_decomposition",
    "canonical_invariants",
    "center_invariants",
    "closed_form_decomposition",
    "display_factors",
    "embeds",
    "evaluate",
    "exchange_identity_check",
    "gcd_doubling_check",
    "is_prime_power",
    "oracle_invariants",
    "power_gcd_closed_form",
    "power_two_part",
    "symbolic_decomposition",
    "torus_order",
    "two_part",
]
