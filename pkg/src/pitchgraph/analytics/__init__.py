from .centrality import CentralityScores, betweenness, normalize_scores
from .communities import Partition, louvain, modularity
from .speeds import CommunitySpeedSummary, community_speed_summary
from .stats import GraphStats, graph_stats

__all__ = [
    "CentralityScores",
    "CommunitySpeedSummary",
    "GraphStats",
    "Partition",
    "betweenness",
    "community_speed_summary",
    "graph_stats",
    "louvain",
    "modularity",
    "normalize_scores",
]
