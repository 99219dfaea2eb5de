"""Exact H-coloring counts of trees and path-minimality verification tools."""

from .graphs import (
    GraphParseError,
    SizeLimitError,
    TargetGraph,
    Tree,
    add_looped_dominating,
    bipartition,
    blow_up,
    components,
    disjoint_union,
    format_graph,
    induced_subgraph,
    is_isomorphic,
    is_regular,
    parse_graph,
    remove_isolated,
    tensor_product,
)
from .trees import (
    CanonicalTree,
    all_trees,
    bare_path,
    canonical_code,
    has_balanced_bipartition,
    kc_closure,
    kc_move,
    kc_successors,
    path,
    star,
    tree_count,
)
from .automorphy import (
    OrbitPartition,
    SimilarityMatrix,
    automorphisms,
    find_increasing_ordering,
    has_increasing_columns,
    orbit_partition,
    similarity_matrix,
)
from .homcount import (
    activities,
    check_blowup_identity,
    hom_brute_force,
    hom_count,
    hom_vector,
    kc_difference_decomposition,
    partition_function,
    path_pair_counts,
    tree_hom,
    tree_partition_function,
)
from .extremal import (
    H_IND,
    HLVerdict,
    MinimizerReport,
    SMALL_TARGETS,
    StrongHLCertificate,
    check_strong_hl_certificate,
    classify_small_targets,
    find_hl_counterexample_search,
    is_loop_threshold,
    make_capacity_graph,
    make_folkman_plus_dominating,
    make_H_abl,
    make_widom_rowlinson,
    minimizers,
    sidorenko_check,
    verify_hoffman_london,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
