"""Finite groupoids, crossed G-sets over a G-monoid, and exact integer
presentations of Burnside, Hadamard, and crossed Burnside rings."""

from . import errors
from .groupoid import (
    FiniteGroupoid,
    GroupoidFunctor,
    SubgroupoidSpec,
    connected_components,
    connected_structure_iso,
    direct_product,
    disjoint_union,
    from_group,
    group_table_from_perm_gens,
    inclusion_equivalence,
    is_connected,
    is_normal_subgroupoid,
    isotropy_group,
    pair_groupoid,
    validate_groupoid,
)
from .gsets import (
    GMap,
    GMonoid,
    GSet,
    Monoid,
    action_groupoid,
    conjugation_action,
    empty_gset,
    gset_coproduct,
    gset_product,
    is_transitive,
    marks,
    orbit_decomposition,
    terminal_gset,
    trivial_gmonoid,
    underlying_gset,
)
from .crossed import (
    CrossedGSet,
    CrossedMap,
    braiding,
    braiding_inverse,
    check_monoidal_axioms,
    coherence_isos,
    crossed_coproduct,
    distributivity_iso,
    tensor,
    transport_connected,
    trivial_label_embed,
    unit_object,
    validate_crossed,
)
from .classify import (
    BasisCatalog,
    TransitivePiece,
    are_isomorphic,
    brute_force_basis,
    enumerate_basis,
    express_in_basis,
    transitive_decomposition,
)
from .rings import (
    RingElement,
    RingHom,
    RingPresentation,
    action_groupoid_iso_check,
    burnside_ring,
    connected_reduction_hom,
    crossed_burnside_ring,
    decomposition_hom,
    embedding_hom,
    hadamard_ring,
    ring_add,
    ring_eq,
    ring_mul,
)

__all__ = [
    "errors",
    "FiniteGroupoid",
    "GroupoidFunctor",
    "SubgroupoidSpec",
    "connected_components",
    "connected_structure_iso",
    "direct_product",
    "disjoint_union",
    "from_group",
    "group_table_from_perm_gens",
    "inclusion_equivalence",
    "is_connected",
    "is_normal_subgroupoid",
    "isotropy_group",
    "pair_groupoid",
    "validate_groupoid",
    "GMap",
    "GMonoid",
    "GSet",
    "Monoid",
    "action_groupoid",
    "conjugation_action",
    "empty_gset",
    "gset_coproduct",
    "gset_product",
    "is_transitive",
    "marks",
    "orbit_decomposition",
    "terminal_gset",
    "trivial_gmonoid",
    "underlying_gset",
    "CrossedGSet",
    "CrossedMap",
    "braiding",
    "braiding_inverse",
    "check_monoidal_axioms",
    "coherence_isos",
    "crossed_coproduct",
    "distributivity_iso",
    "tensor",
    "transport_connected",
    "trivial_label_embed",
    "unit_object",
    "validate_crossed",
    "BasisCatalog",
    "TransitivePiece",
    "are_isomorphic",
    "brute_force_basis",
    "enumerate_basis",
    "express_in_basis",
    "transitive_decomposition",
    "RingElement",
    "RingHom",
    "RingPresentation",
    "action_groupoid_iso_check",
    "burnside_ring",
    "connected_reduction_hom",
    "crossed_burnside_ring",
    "decomposition_hom",
    "embedding_hom",
    "hadamard_ring",
    "ring_add",
    "ring_eq",
    "ring_mul",
]
