"""Local-search heuristics for group closeness maximization.

Find a group of k vertices with high group closeness centrality: the
Local-Swaps and Grow-Shrink local searches, a greedy baseline, and exact
brute-force oracles for verification at small scale.
"""

from .backend import BACKEND
from .graph import (
    Graph,
    GraphParseError,
    estimate_diameter,
    largest_connected_component,
    parse_dimacs_gr,
    parse_edge_list,
    to_edge_list,
)
from .greedy import greedy_group
from .growshrink import (
    GsState,
    gs_delta_plus_all,
    gs_grow_step,
    gs_init,
    gs_remove,
    gs_repair,
    gs_run,
    gs_shrink_step,
)
from .localswap import (
    LsState,
    SwapCandidate,
    ls_apply_swap,
    ls_init,
    ls_run,
    ls_select_swap,
)
from .objective import (
    EnumerationCapError,
    GroupScore,
    brute_force_optimum,
    closeness,
    delta_minus_exact,
    delta_plus_exact,
    farness,
    score,
)
from .reach import (
    ReachEstimate,
    estimate_reach_sizes,
    exact_reach_sizes,
    sketch_minima,
)
from .search import SearchResult, WeightedGraphError
from .sssp import GroupDag, build_group_dag, multi_source_sssp

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "EnumerationCapError",
    "Graph",
    "GraphParseError",
    "GroupDag",
    "GroupScore",
    "GsState",
    "LsState",
    "ReachEstimate",
    "SearchResult",
    "SwapCandidate",
    "WeightedGraphError",
    "brute_force_optimum",
    "build_group_dag",
    "closeness",
    "delta_minus_exact",
    "delta_plus_exact",
    "estimate_diameter",
    "estimate_reach_sizes",
    "exact_reach_sizes",
    "farness",
    "greedy_group",
    "gs_delta_plus_all",
    "gs_grow_step",
    "gs_init",
    "gs_remove",
    "gs_repair",
    "gs_run",
    "gs_shrink_step",
    "largest_connected_component",
    "ls_apply_swap",
    "ls_init",
    "ls_run",
    "ls_select_swap",
    "multi_source_sssp",
    "parse_dimacs_gr",
    "parse_edge_list",
    "score",
    "sketch_minima",
    "to_edge_list",
    "__version__",
]
