"""Spatial activity graphs and analytics for GPS-tracked field sports.

The pipeline: action CSV -> local planar projection -> square grid ->
rolling time windows -> one directed activity graph per window ->
statistics, betweenness centrality, Louvain communities and community
speed summaries -> JSON/CSV reports and SVG heatmaps.
"""

from .analytics import (
    CentralityScores,
    CommunitySpeedSummary,
    GraphStats,
    Partition,
    betweenness,
    community_speed_summary,
    graph_stats,
    louvain,
    modularity,
)
from .grid import (
    BoundingBox,
    Cell,
    CellAnnotatedAction,
    Grid,
    PlanarPoint,
    assign_cell,
    compute_bounding_box,
    generate_grid,
    project_to_local,
    planar_to_geo,
    prune_and_annotate,
)
from .ingest import (
    ActionRecord,
    GeoCoordinate,
    HeaderError,
    RejectionReport,
    parse_actions,
    validate_and_clean,
    write_actions_csv,
)
from .snapshots import (
    AggregatedEdge,
    SpatialActivityGraph,
    TimeWindow,
    GraphSeries,
    build_graph,
    build_series,
    generate_windows,
)
from .synthetic import ScenarioSpec, generate, ground_truth

__version__ = "0.1.0"
