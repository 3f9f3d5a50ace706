"""Machine-readable report artifacts: per-window JSON and the series CSV."""

from __future__ import annotations

import json
from typing import TextIO

from .analytics import (
    CentralityScores,
    CommunitySpeedSummary,
    GraphStats,
    Partition,
    normalize_scores,
)
from .snapshots import SpatialActivityGraph

STATS_CSV_HEADER = (
    "window_start,window_end,nodes,edges,avg_weight_edges,"
    "density,avg_degree,avg_clustering_coeff,avg_shortest_path"
)


def window_report(
    g: SpatialActivityGraph,
    stats: GraphStats,
    centrality: CentralityScores,
    partition: Partition,
    speeds: list[CommunitySpeedSummary],
) -> dict:
    """Assemble every analytic of one window into a JSON-ready dict.

    Betweenness entries carry both the raw score and its normalized form;
    community speed stats are null for communities without an outgoing
    edge.
    """
    normalized = normalize_scores(centrality)
    return {
        "window": {"start": g.window.start, "end": g.window.end},
        "stats": {
            "nodes": stats.node_count,
            "edges": stats.edge_count,
            "self_loops": stats.self_loop_count,
            "avg_weight_edges": stats.avg_edge_weight,
            "density": stats.density,
            "avg_degree": stats.avg_degree,
            "avg_clustering_coeff": stats.avg_clustering_coefficient,
            "avg_shortest_path": stats.avg_shortest_path,
        },
        "betweenness_mode": centrality.mode,
        "betweenness": [
            {
                "cell_id": cell,
                "score": centrality.scores[cell],
                "score_normalized": normalized.scores[cell],
            }
            for cell in sorted(centrality.scores)
        ],
        "partition": {
            "communities": partition.community_count,
            "assignment": [
                {"cell_id": cell, "community": partition.assignment[cell]}
                for cell in sorted(partition.assignment)
            ],
            "modularity": partition.modularity,
        },
        "community_speeds": [
            {
                "community_id": s.community_id,
                "edge_count": s.edge_count,
                "min": s.minimum,
                "q1": s.q1,
                "mean": s.mean,
                "q3": s.q3,
                "max": s.maximum,
            }
            for s in speeds
        ],
    }


def report_to_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=1) + "\n"


def stats_csv_row(stats: GraphStats) -> str:
    return ",".join(
        (
            repr(float(stats.window.start)),
            repr(float(stats.window.end)),
            str(stats.node_count),
            str(stats.edge_count),
            repr(stats.avg_edge_weight),
            repr(stats.density),
            repr(stats.avg_degree),
            repr(stats.avg_clustering_coefficient),
            repr(stats.avg_shortest_path),
        )
    )


def write_stats_csv(stats_list: list[GraphStats], sink: TextIO) -> None:
    sink.write(STATS_CSV_HEADER + "\n")
    for stats in stats_list:
        sink.write(stats_csv_row(stats) + "\n")
