"""Exact domination toolkit for small graphs.

Core objects: immutable bitmask :class:`~welldom.graphs.Graph`, vertex sets
as plain ints, exact enumeration of minimal dominating and maximal
independent sets, well-dominated / well-covered recognition with witnesses,
Cartesian products with coordinate maps, a graph6 codec with exhaustive
connected-graph corpora, and a claim-verification harness with a CLI.
"""

from .corpus import connected_graphs_up_to_iso, decode_graph6, encode_graph6
from .domination import (
    WellDomReport,
    brute_force_minimal_dominating_sets,
    domination_number,
    enumerate_maximal_independent_sets,
    enumerate_minimal_dominating_sets,
    find_open_irredundant_gamma_set,
    independence_number,
    is_dominating,
    is_irredundant,
    is_minimal_dominating,
    is_open_irredundant,
    is_well_covered,
    is_well_dominated,
    private_neighbors,
)
from .errors import (
    CapacityError,
    Graph6ParseError,
    InputError,
    InternalError,
    PreconditionError,
    WelldomError,
)
from .families import complete, complete_bipartite, cycle, family_f1, family_f2, path
from .graphs import (
    CAPACITY,
    Graph,
    bit,
    canonical_form,
    disjoint_union,
    is_isomorphic,
    iter_members,
    mask_of,
    members,
)
from .product import ProductMap, cartesian_product, layer, lift_set

__all__ = [
    "CAPACITY",
    "CapacityError",
    "Graph",
    "Graph6ParseError",
    "InputError",
    "InternalError",
    "PreconditionError",
    "ProductMap",
    "WellDomReport",
    "WelldomError",
    "bit",
    "brute_force_minimal_dominating_sets",
    "canonical_form",
    "cartesian_product",
    "complete",
    "complete_bipartite",
    "connected_graphs_up_to_iso",
    "cycle",
    "decode_graph6",
    "disjoint_union",
    "domination_number",
    "encode_graph6",
    "enumerate_maximal_independent_sets",
    "enumerate_minimal_dominating_sets",
    "family_f1",
    "family_f2",
    "find_open_irredundant_gamma_set",
    "independence_number",
    "is_dominating",
    "is_irredundant",
    "is_isomorphic",
    "is_minimal_dominating",
    "is_open_irredundant",
    "is_well_covered",
    "is_well_dominated",
    "iter_members",
    "layer",
    "lift_set",
    "mask_of",
    "members",
    "path",
    "private_neighbors",
]
