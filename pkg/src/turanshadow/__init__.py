"""k-clique counting on sparse graphs by sampling over dense-subgraph covers."""

from .baseline import BaselineReport, edge_sampling_estimate
from .estimator import (
    DEFAULT_SAMPLES,
    EstimateReport,
    SamplerState,
    build_sampler,
    estimate_from_trials,
    f_of,
    gamma_of,
    required_samples,
    run_trials,
    turan_shadow_count,
)
from .graph import (
    DegeneracyOrder,
    EdgeListParseError,
    Graph,
    degeneracy_order,
    induced_adjacency_matrix,
    induced_edge_count,
    induced_subgraph,
    load_edge_list,
    out_neighbors,
)
from .oracle import (
    CountOverflowError,
    ExactCount,
    TimeBudgetExceeded,
    exact_kclique_count,
    naive_kclique_count,
)
from .shadow import (
    MAX_K,
    ShadowEntry,
    TuranShadow,
    dump_shadow,
    shadow_finder,
    shadow_stats,
)

__version__ = "0.1.0"

__all__ = [
    "BaselineReport",
    "CountOverflowError",
    "DEFAULT_SAMPLES",
    "DegeneracyOrder",
    "EdgeListParseError",
    "EstimateReport",
    "ExactCount",
    "Graph",
    "MAX_K",
    "SamplerState",
    "ShadowEntry",
    "TimeBudgetExceeded",
    "TuranShadow",
    "build_sampler",
    "degeneracy_order",
    "dump_shadow",
    "edge_sampling_estimate",
    "estimate_from_trials",
    "exact_kclique_count",
    "f_of",
    "gamma_of",
    "induced_adjacency_matrix",
    "induced_edge_count",
    "induced_subgraph",
    "load_edge_list",
    "naive_kclique_count",
    "out_neighbors",
    "required_samples",
    "run_trials",
    "shadow_finder",
    "shadow_stats",
    "turan_shadow_count",
]
