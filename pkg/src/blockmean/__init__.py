"""Exact mean connected-induced-subgraph (CIS) analysis of block graphs.

The package computes CIS polynomials and their exact rational means two
independent ways (brute-force enumeration and a block-structure
recursion), verifies the structural inequalities relating local and
global means, reproduces the extremal facts about paths, complete graphs,
and caterpillars by exhaustive isomorph-free search, and bridges to the
mean sub-k-tree order of k-trees through the clique dual.
"""

from .blocks import (
    Antenna,
    BlockCutTree,
    antennas,
    block_cut_tree,
    cut_vertices,
    is_block_graph,
    is_caterpillar,
    is_complete_graph,
    is_path_graph,
    is_tree,
    leaves,
)
from .certs import (
    CanonicalCert,
    canonical_cert,
    canonical_form,
    graph_from_cert,
    isomorphic_brute,
)
from .cis import (
    CisReport,
    broom_local_poly,
    broom_minus_vertex_poly,
    closed_form_stats,
    complete_poly,
    enum_connected_sets,
    local_mean,
    mean,
    mean_star,
    mu,
    path_poly,
    phi,
    phi_brute,
    phi_fast,
    phi_local,
    phi_local_brute,
    phi_local_fast,
    phi_local_set_brute,
    phi_star_brute,
)
from .graphs import (
    EdgeListParseError,
    Graph,
    GraphError,
    broom_graph,
    build_graph,
    caterpillar_graph,
    complete_graph,
    format_edge_list,
    glue_at_vertex,
    parse_edge_list,
    path_graph,
    spider_graph,
)
from .ktree import (
    KTree,
    KTreeError,
    build_k_tree,
    dual_graph,
    enum_sub_k_trees_brute,
    is_k_tree,
    k_cliques,
    mean_sub_k_tree,
    random_k_tree,
    sub_k_tree_mean_brute,
)
from .lemmas import (
    FamilyChain,
    Verdict,
    clique_stretching_family,
    edge_gluing_family,
    improve_step,
    improve_to_path,
    sweep_graph,
    verify_count_bounds,
    verify_local_block,
    verify_local_global,
    verify_local_sum,
    verify_mu,
    verify_partition,
    verify_weight_bound,
    vertex_gluing_family,
)
from .poly import IntPolynomial, mean_from_poly
from .search import (
    SearchResult,
    block_graph_classes,
    check_max_conjecture,
    check_min_theorem,
    connected_graph_classes,
    extremal_scan,
    gen_block_graphs,
    gen_connected_graphs,
    random_connected_block_graph,
)

__version__ = "0.1.0"
