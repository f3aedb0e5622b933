"""Matching powers of edge ideals and their bi-Cohen-Macaulay classification."""

from .graph import (
    DomainError,
    Graph,
    Matching,
    complement,
    complete_graph,
    enumerate_graphs,
    from_graph6,
    induced_subgraph,
    is_isomorphic,
    matching_number,
    matchings,
    path_graph,
    to_graph6,
)
from .homology import (
    BettiTable,
    SimplicialComplex,
    alexander_dual,
    betti_table,
    find_vertex_splitting,
    has_linear_resolution,
    homological_profile,
    is_betti_splitting,
    is_bi_cm,
    is_cohen_macaulay,
    reduced_homology_ranks,
    stanley_reisner,
)
from .ideal import (
    SquarefreeIdeal,
    edge_ideal,
    ideal_stats,
    intersect,
    matching_power,
    matching_product,
    squarefree_power,
    t_spread_borel,
)
from .kernels import BACKEND

__version__ = "0.1.0"
