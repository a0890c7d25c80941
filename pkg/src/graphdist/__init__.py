"""Graph dissimilarity through pairwise neighborhood-distance distributions.

Workflow: load or generate an undirected simple graph, collect the Jaccard
distance between the neighborhoods of every vertex pair into an empirical
distribution, then compare two graphs' distributions with the two-sample
Kolmogorov-Smirnov statistic and the normalized Wasserstein distance.
"""

from .compare import (
    SERIES_MAX_TERMS,
    SERIES_TERM_TOLERANCE,
    ComparisonResult,
    EmpiricalCdf,
    compare_cdfs,
    compare_samples,
    ks_distance,
    ks_p_value,
    normalize_wasserstein,
    wasserstein,
)
from .generators import (
    GENERATOR_VERSION,
    RNG_NAME,
    ErSpec,
    SbmSpec,
    generate_er,
    generate_sbm,
    plant_components,
)
from .graph import (
    EdgeListParseError,
    Graph,
    GraphSummary,
    SelfLoopWarning,
    degree_sequence,
    parse_edge_list,
    serialize_edge_list,
    summarize,
)
from .jaccard import (
    DENSITY_THRESHOLD,
    DistanceSample,
    all_pairs_distances,
    all_pairs_histogram,
    distance_histogram,
    jaccard_distance,
)

__version__ = "0.1.0"

__all__ = [
    "ComparisonResult",
    "DENSITY_THRESHOLD",
    "DistanceSample",
    "EdgeListParseError",
    "EmpiricalCdf",
    "ErSpec",
    "GENERATOR_VERSION",
    "Graph",
    "GraphSummary",
    "RNG_NAME",
    "SERIES_MAX_TERMS",
    "SERIES_TERM_TOLERANCE",
    "SbmSpec",
    "SelfLoopWarning",
    "all_pairs_distances",
    "all_pairs_histogram",
    "compare_cdfs",
    "compare_samples",
    "degree_sequence",
    "distance_histogram",
    "generate_er",
    "generate_sbm",
    "jaccard_distance",
    "ks_distance",
    "ks_p_value",
    "normalize_wasserstein",
    "parse_edge_list",
    "plant_components",
    "serialize_edge_list",
    "summarize",
    "wasserstein",
    "__version__",
]
