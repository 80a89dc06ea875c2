"""Exact strong clique computations on small graphs with forbidden cycle
lengths: solvers, extremal constructions, a registry of proven and
conjectured bounds, exhaustive small-graph verification sweeps, and a
seeded counterexample hunt."""

from .graph import (
    MAX_VERTICES,
    Graph,
    add_edge,
    bipartition,
    build_graph,
    degrees,
    edge_distance,
    induced_subgraph,
    is_bipartite,
    line_graph,
    max_degree,
    ore_degree,
    ore_degree_of_subgraph,
    remove_edge,
    square,
)
from .graph6 import format_graph6, parse_graph6, parse_graph6_lines
from .rng import SplitMix64
from .cycles import (
    BranchingReport,
    CycleProfile,
    ErdosGallaiReport,
    KsatReport,
    branching_edges,
    check_erdos_gallai,
    check_ksat,
    contains_cycle,
    contains_path,
    cycle_profile,
    find_cycle,
    find_path,
    girth,
    has_path_between,
)
from .cliques import (
    StrongCliqueWitness,
    StrongColoring,
    greedy_strong_clique,
    is_strong_clique,
    max_clique,
    strong_adjacency,
    strong_chromatic_index,
    strong_clique_number,
    strong_clique_number_bruteforce,
)
from .constructions import (
    FAMILIES,
    ConstructionSpec,
    bip_pendant_construction,
    blown_up_c5,
    complete_bipartite,
    hairy_clique,
    make_construction,
)
from .bounds import (
    BoundCheck,
    BoundInstance,
    BoundSpec,
    applicable_bounds,
    check_bound,
    check_witness_edge_bound,
    exact_bound,
    find_spec,
    theorem_registry,
)
from .reduction import (
    HSidedPath,
    ReductionResult,
    bipartite_reduction,
    find_h_sided_path,
    h_sided_order_bound,
    step_h_sided_path,
)
from .search import (
    HuntConfig,
    HuntResult,
    SweepReport,
    canonical_form,
    canonical_key,
    enumerate_graphs,
    graph_record,
    hunt,
    sweep,
)

__version__ = "0.1.0"
