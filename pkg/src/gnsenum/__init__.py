"""Enumeration of finite-complement submonoids of N^d.

A gap set is the finite complement of such a monoid.  The package walks
rooted trees over gap sets (everything, one per coordinate-permutation
orbit, or the symmetric ones only), tabulates counts per genus, and
checks the results against recorded tables and a brute-force oracle.
"""

from .bruteforce import brute_force_all, brute_force_representatives, candidate_box
from .canonical import (
    GenusMismatch,
    RepVerdict,
    compare_R,
    is_equivariant,
    is_representative,
    isomorphism_between,
    orbit_size,
    permute_gns,
    representative,
    safe_child_generator,
)
from .core import (
    GLEX,
    LEX,
    ORDER1,
    MAX_DIM,
    OrderSpec,
    Permutation,
    apply_permutation,
    basis_index,
    basis_point,
    compare,
    get_order,
    min_basis_point,
    orbit_point,
    order1,
)
from .counting import (
    CountTable,
    ResourceLimit,
    builtin_reference_table,
    count,
    count_by_span,
    reference_value,
    verify_stabilization,
    verify_sum_identity,
)
from .semigroup import (
    GapSemigroup,
    NotAGap,
    NotAMonoid,
    NotMinimalGenerator,
    NotSpecialGap,
    apery_in_box,
    contains,
    extend,
    frobenius_element,
    gap_span_dimension,
    minimal_generators,
    multiplicity,
    pseudo_frobenius,
    remove_generator,
    special_gaps,
    u_set,
    validate,
)
from .trees import (
    CheckpointCorrupt,
    Frontier,
    NotEquivariant,
    NotOGoodOrder,
    NotRepresentative,
    TreeKind,
    children_equivariant,
    children_fixed_genus,
    children_full,
    children_representative,
    ordinary_gns,
    traverse,
)

__all__ = [
    "GLEX",
    "LEX",
    "MAX_DIM",
    "ORDER1",
    "CheckpointCorrupt",
    "CountTable",
    "Frontier",
    "GapSemigroup",
    "GenusMismatch",
    "NotAGap",
    "NotAMonoid",
    "NotEquivariant",
    "NotMinimalGenerator",
    "NotOGoodOrder",
    "NotRepresentative",
    "NotSpecialGap",
    "OrderSpec",
    "Permutation",
    "RepVerdict",
    "ResourceLimit",
    "TreeKind",
    "apery_in_box",
    "apply_permutation",
    "basis_index",
    "basis_point",
    "contains",
    "extend",
    "frobenius_element",
    "gap_span_dimension",
    "minimal_generators",
    "multiplicity",
    "pseudo_frobenius",
    "remove_generator",
    "special_gaps",
    "u_set",
    "validate",
    "brute_force_all",
    "brute_force_representatives",
    "builtin_reference_table",
    "candidate_box",
    "children_equivariant",
    "children_fixed_genus",
    "children_full",
    "children_representative",
    "compare",
    "compare_R",
    "count",
    "count_by_span",
    "get_order",
    "is_equivariant",
    "is_representative",
    "isomorphism_between",
    "min_basis_point",
    "orbit_point",
    "orbit_size",
    "order1",
    "ordinary_gns",
    "permute_gns",
    "reference_value",
    "representative",
    "safe_child_generator",
    "traverse",
    "verify_stabilization",
    "verify_sum_identity",
]
