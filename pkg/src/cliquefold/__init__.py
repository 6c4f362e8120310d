"""cliquefold: clique counting extremal to bounded-degree graphs, verified small.

A graph with max degree r can pack at most as many cliques as a disjoint
union of blocks a.K_{r+1} u K_b.  This package implements the machinery
around that statement at desk scale: exact clique/census counting, tight
clusters with folding and discharging, threshold/lex graph mu-extremality,
and exhaustive enumeration acting as an oracle for every claim.  Hot kernels
run compiled (Cython) when available, with a pure-Python twin selected at
import; `BACKEND` says which one is live.
"""

from ._backend import BACKEND
from .clusters import (
    Cluster,
    ClusterAudit,
    DischargeAudit,
    FoldStep,
    ReduceResult,
    discharge_audit,
    find_clusters,
    fold,
    is_dischargeable,
    is_foldable,
    reduce_graph,
    tight_edges,
)
from .graph6 import (
    Graph6ParseError,
    read_graph6,
    read_graph6_file,
    write_graph6,
    write_graph6_file,
)
from .graphs import (
    MAX_VERTICES,
    CapacityError,
    DomainError,
    Graph,
    InvariantViolation,
    TripleCensus,
    are_isomorphic,
    canonical_form,
    canonical_graph,
    clique_counts,
    complete,
    complete_bipartite,
    count_all_cliques,
    count_cliques_of_size,
    cycle,
    disjoint_union,
    edge_benefit,
    edge_weight,
    edgeless,
    graph_from_code,
    join,
    mu,
    path,
    star,
    triangle_count,
    triple_census,
    weight_sum,
)
from .search import (
    ExtremalParams,
    SearchSpace,
    VerifyReport,
    Witness,
    avgwt_condition_holds,
    count_classes,
    enumerate_graphs,
    extremal_clique_search,
    extremal_total_clique_search,
    extremal_weight_sum,
    finite_calculation_window,
    resolve_workers,
    verify_avgwt_lemma,
    verify_cluster_dichotomy,
    verify_finite_calculation,
    verify_lex_mu,
    verify_main_pipeline,
    verify_star_matching,
)
from .threshold import (
    CompressionSplit,
    compress,
    compression_split,
    lex_code,
    lex_graph,
    mu_bound_min_degree_one,
    star_matching_graph,
    threshold_edge_count,
    threshold_from_code,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "MAX_VERTICES",
    "CapacityError",
    "DomainError",
    "InvariantViolation",
    "Graph",
    "TripleCensus",
    "Cluster",
    "ClusterAudit",
    "DischargeAudit",
    "FoldStep",
    "ReduceResult",
    "CompressionSplit",
    "ExtremalParams",
    "SearchSpace",
    "VerifyReport",
    "Witness",
    "Graph6ParseError",
    "are_isomorphic",
    "avgwt_condition_holds",
    "canonical_form",
    "canonical_graph",
    "clique_counts",
    "complete",
    "complete_bipartite",
    "compress",
    "compression_split",
    "count_all_cliques",
    "count_classes",
    "count_cliques_of_size",
    "cycle",
    "discharge_audit",
    "disjoint_union",
    "edge_benefit",
    "edge_weight",
    "edgeless",
    "enumerate_graphs",
    "extremal_clique_search",
    "extremal_total_clique_search",
    "extremal_weight_sum",
    "find_clusters",
    "finite_calculation_window",
    "fold",
    "graph_from_code",
    "is_dischargeable",
    "is_foldable",
    "join",
    "lex_code",
    "lex_graph",
    "mu",
    "mu_bound_min_degree_one",
    "path",
    "read_graph6",
    "read_graph6_file",
    "reduce_graph",
    "resolve_workers",
    "star",
    "star_matching_graph",
    "threshold_edge_count",
    "threshold_from_code",
    "tight_edges",
    "triangle_count",
    "triple_census",
    "verify_avgwt_lemma",
    "verify_cluster_dichotomy",
    "verify_finite_calculation",
    "verify_lex_mu",
    "verify_main_pipeline",
    "verify_star_matching",
    "weight_sum",
    "write_graph6",
    "write_graph6_file",
]
