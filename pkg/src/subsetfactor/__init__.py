"""Factorizations of finite groups by direct subset products.

Decides whether subsets of finite groups are left, right, or two-sided
factors, decides the CFS ("complete factorization of sizes") and strong CFS
properties, and carries an embedded catalog of factorization identities and
non-factor witnesses that together classify the groups in which every
Lagrange subset is a factor.
"""

from .cfs import (
    BudgetExceededError,
    CfsReport,
    StrongCfsReport,
    STRONG_CFS_GROUPS,
    VerificationReport,
    WitnessCatalogEntry,
    catalog_group,
    catalog_metadata,
    cyclic_witness,
    decide_cfs,
    decide_strong_cfs,
    enumerate_lagrange_subsets,
    verify_paper,
    witness_catalog,
)
from .factor import (
    CLASS_LEFT_ONLY,
    CLASS_NONE,
    CLASS_RIGHT_ONLY,
    CLASS_TWO_SIDED,
    FactorReport,
    NonFactorEvidence,
    all_translates_meet,
    classify_factor,
    enumerate_complements,
    extend_complement,
    find_left_complement,
    find_right_complement,
    find_same_complement,
    hole_criterion,
    index2_criterion,
    inversion_dual,
    lagrange_obstruction,
    restrict_complement,
)
from .geometry import (
    Ball,
    GeneratingSet,
    ball,
    construct_tilde,
    is_connected_subset,
    standard_generating_set,
    tilde_condition,
    tilde_condition_two_sided,
)
from .groups import (
    SMALL_GROUP_CATALOG,
    Group,
    GroupSpec,
    GroupSpecError,
    Subgroup,
    Transversal,
    all_subgroups,
    automorphisms,
    build_group,
    generated_subgroup,
    left_transversal,
    load_group_file,
    right_transversal,
    save_group_file,
    subgroup_as_group,
    subgroup_from_mask,
    transversal,
    validate_table,
)
from .notation import (
    NotationError,
    format_subset,
    group_from_string,
    load_subset_file,
    parse_element_word,
    parse_group_spec,
    parse_subset,
    save_subset_file,
    subset_words,
)
from .subsets import (
    ProductResult,
    Subset,
    canonical_form,
    invert_set,
    is_lagrange,
    product,
    translate,
    verify_direct_factorization,
)

__version__ = "0.1.0"

__all__ = [
    "Ball",
    "BudgetExceededError",
    "CLASS_LEFT_ONLY",
    "CLASS_NONE",
    "CLASS_RIGHT_ONLY",
    "CLASS_TWO_SIDED",
    "CfsReport",
    "FactorReport",
    "GeneratingSet",
    "Group",
    "GroupSpec",
    "GroupSpecError",
    "NonFactorEvidence",
    "NotationError",
    "ProductResult",
    "SMALL_GROUP_CATALOG",
    "STRONG_CFS_GROUPS",
    "StrongCfsReport",
    "Subgroup",
    "Subset",
    "Transversal",
    "VerificationReport",
    "WitnessCatalogEntry",
    "all_subgroups",
    "all_translates_meet",
    "automorphisms",
    "ball",
    "build_group",
    "canonical_form",
    "catalog_group",
    "catalog_metadata",
    "classify_factor",
    "construct_tilde",
    "cyclic_witness",
    "decide_cfs",
    "decide_strong_cfs",
    "enumerate_complements",
    "enumerate_lagrange_subsets",
    "extend_complement",
    "find_left_complement",
    "find_right_complement",
    "find_same_complement",
    "format_subset",
    "generated_subgroup",
    "group_from_string",
    "hole_criterion",
    "index2_criterion",
    "invert_set",
    "inversion_dual",
    "is_connected_subset",
    "is_lagrange",
    "lagrange_obstruction",
    "left_transversal",
    "load_group_file",
    "load_subset_file",
    "parse_element_word",
    "parse_group_spec",
    "parse_subset",
    "product",
    "restrict_complement",
    "right_transversal",
    "save_group_file",
    "save_subset_file",
    "standard_generating_set",
    "subgroup_as_group",
    "subgroup_from_mask",
    "subset_words",
    "tilde_condition",
    "tilde_condition_two_sided",
    "translate",
    "transversal",
    "validate_table",
    "verify_direct_factorization",
    "verify_paper",
    "witness_catalog",
]
