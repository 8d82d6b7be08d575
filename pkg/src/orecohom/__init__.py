"""Exact relative Hochschild cohomology of monogenic skew-polynomial quotients.

The package builds A = K[x, alpha]/<f> over an exact field, computes the
cohomology of the two-periodic small complex, evaluates cup products and
Gerstenhaber brackets, and cross-checks every closed-form answer against a
normalized bar-complex oracle.
"""

from .fields import (
    QQ,
    FieldError,
    Scalar,
    cyclotomic_minpoly,
    extension_field,
    make_field,
    prime_field,
)
from .kalgebra import (
    AlgebraError,
    AlgebraK,
    Endo,
    GroupData,
    KElem,
    character_from_values,
    cyclic_group,
    endo_from_character,
    group_algebra,
    group_from_presentation_gh4,
    identity_endo,
    quaternion_algebra,
    scalar_algebra,
    twisted_invariants_k,
)
from .monogenic import (
    AElem,
    MonogenicAlgebra,
    MonogenicError,
    Resolution,
    normality_check,
    validate_f,
)
from .cohomology import (
    Bimodule,
    CohomologyError,
    SmallComplex,
    build_small_complex,
    classes_equal,
    cohomology_dims,
    cohomology_group,
    complex_report,
)
from .products import (
    BarCochain,
    ComparisonMaps,
    ProductsError,
    SmallCochain,
    bracket_class_table,
    bracket_small_closed,
    bracket_small_generic,
    chain_map_report,
    cup_class_table,
    cup_small,
    cup_small_oracle,
)
from .specio import (
    Instance,
    SpecError,
    build_instance,
    load_instance,
)
from .closedforms import (
    ClosedFormError,
    WitnessData,
    certify_diagonalizable,
    character_class_basis,
    check_collapsed_cochain_spaces,
    check_collapsed_differentials,
    class_membership_period,
    cohomology_periodicity,
    collapsed_cohomology_table,
    cyclic_group_cohomology,
    diagonalizable_cohomology_table,
    find_witness,
    group_algebra_cohomology_table,
    presentation_report,
    quaternion_rotation_report,
    rank_one_hopf_report,
    untwisted_annihilator_table,
    untwisted_model_check,
    witness_check,
)

__all__ = [
    "QQ",
    "FieldError",
    "Scalar",
    "cyclotomic_minpoly",
    "extension_field",
    "make_field",
    "prime_field",
    "AlgebraError",
    "AlgebraK",
    "Endo",
    "GroupData",
    "KElem",
    "character_from_values",
    "cyclic_group",
    "endo_from_character",
    "group_algebra",
    "group_from_presentation_gh4",
    "identity_endo",
    "quaternion_algebra",
    "scalar_algebra",
    "twisted_invariants_k",
    "AElem",
    "MonogenicAlgebra",
    "MonogenicError",
    "Resolution",
    "normality_check",
    "validate_f",
    "Bimodule",
    "CohomologyError",
    "SmallComplex",
    "build_small_complex",
    "classes_equal",
    "cohomology_dims",
    "cohomology_group",
    "complex_report",
    "BarCochain",
    "ComparisonMaps",
    "ProductsError",
    "SmallCochain",
    "bracket_class_table",
    "bracket_small_closed",
    "bracket_small_generic",
    "chain_map_report",
    "cup_class_table",
    "cup_small",
    "cup_small_oracle",
    "Instance",
    "SpecError",
    "build_instance",
    "load_instance",
    "ClosedFormError",
    "WitnessData",
    "certify_diagonalizable",
    "character_class_basis",
    "check_collapsed_cochain_spaces",
    "check_collapsed_differentials",
    "class_membership_period",
    "cohomology_periodicity",
    "collapsed_cohomology_table",
    "cyclic_group_cohomology",
    "diagonalizable_cohomology_table",
    "find_witness",
    "group_algebra_cohomology_table",
    "presentation_report",
    "quaternion_rotation_report",
    "rank_one_hopf_report",
    "untwisted_annihilator_table",
    "untwisted_model_check",
    "witness_check",
]
