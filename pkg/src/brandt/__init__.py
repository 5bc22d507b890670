"""Brandt extensions of finite monoids with zero and their automorphism
groups, computed two ways: a triple parametrization and a brute-force oracle.
"""

from .brandt import BrandtSemigroup, brandt_semigroup_of_group, construct_brandt, matrix_units
from .semigroups import (
    FiniteSemigroup,
    SemigroupMap,
    UnitGroup,
    adjoin_identity,
    adjoin_zero,
    construct_cyclic_group,
    construct_cyclic_group_with_zero,
    construct_zero_semigroup,
    extend_automorphism_to_zero,
    idempotents,
    is_automorphism,
    maximal_idempotents,
    natural_leq,
    unit_group,
    validate_semigroup,
)
from .triples import (
    AutTriple,
    aut_group_order,
    compose,
    enumerate_normalized_triples,
    identity_triple,
    invert,
    kernel_enumerate,
    kernel_membership,
    normalize_triple,
    realize_triple,
    triple_group_order,
)
from .oracle import (
    AutGroupReport,
    decompose_automorphism,
    enumerate_automorphisms,
    verify_composition_law,
    verify_matrix_units_rigidity,
    verify_quotient_structure,
    verify_realization_completeness,
    verify_zero_semigroup_bijections,
)

__all__ = [
    "AutGroupReport",
    "AutTriple",
    "BrandtSemigroup",
    "FiniteSemigroup",
    "SemigroupMap",
    "UnitGroup",
    "adjoin_identity",
    "adjoin_zero",
    "aut_group_order",
    "brandt_semigroup_of_group",
    "compose",
    "construct_brandt",
    "construct_cyclic_group",
    "construct_cyclic_group_with_zero",
    "construct_zero_semigroup",
    "decompose_automorphism",
    "enumerate_automorphisms",
    "enumerate_normalized_triples",
    "extend_automorphism_to_zero",
    "idempotents",
    "identity_triple",
    "invert",
    "is_automorphism",
    "kernel_enumerate",
    "kernel_membership",
    "matrix_units",
    "maximal_idempotents",
    "natural_leq",
    "normalize_triple",
    "realize_triple",
    "triple_group_order",
    "unit_group",
    "validate_semigroup",
    "verify_composition_law",
    "verify_matrix_units_rigidity",
    "verify_quotient_structure",
    "verify_realization_completeness",
    "verify_zero_semigroup_bijections",
]
