"""netconsist: node-level consistency of community structure across
multiple realizations of a network."""

from .benchmark import (
    BenchmarkParams,
    GenerationError,
    PlantedBenchmark,
    generate_benchmark,
    measure_mixing,
)
from .consistency import (
    ConsistencyMap,
    OverlapMatrix,
    binary_exclusivity,
    binary_inclusivity,
    overlap_matrix,
    scaled_inclusivity,
)
from .ensemble import (
    ArgmaxReferenceMap,
    SignedCommunityMap,
    WeightedAverageMap,
    argmax_reference_map,
    per_reference_maps,
    signed_community_map,
    weighted_average_map,
)
from .geoviz import (
    GeoLayout,
    RasterAssignment,
    assign_nodes_to_sites,
    render_scalar_map,
    voronoi_raster,
)
from .graph import (
    Graph,
    NodeUniverse,
    Partition,
    community_members,
    load_edge_list,
    load_node_universe,
    load_partition,
    save_edge_list,
    save_partition,
)
from .modularity import (
    DetectorConfig,
    ModularityBreakdown,
    best_partition,
    detect_communities,
    modularity,
)
from .seasons import (
    GroundTruthAlignment,
    SeasonSchedule,
    build_season_network,
    conference_size_table,
    load_schedules,
)
from .similarity import (
    copair_set,
    jaccard_similarity,
    pairwise_jaccard,
    similarity_weights,
)

__version__ = "0.1.0"
