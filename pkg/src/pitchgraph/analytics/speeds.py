"""Speed distribution of the movements originating inside each community."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..snapshots import SpatialActivityGraph
from .communities import Partition


@dataclass(frozen=True)
class CommunitySpeedSummary:
    """Five-number-ish summary of edge speeds leaving a community.

    Quartiles use linear interpolation between order statistics. All
    statistics are None when the community has no originating edge.
    """

    community_id: int
    edge_count: int
    minimum: float | None
    q1: float | None
    mean: float | None
    q3: float | None
    maximum: float | None


def community_speed_summary(
    g: SpatialActivityGraph, partition: Partition
) -> list[CommunitySpeedSummary]:
    """One summary per community, ordered by community id.

    An edge belongs to the community of its origin cell; self-loops are
    included.
    """
    missing = g.nodes - partition.assignment.keys()
    if missing:
        raise ValueError(f"partition does not cover nodes: {sorted(missing)[:5]}")
    by_community: dict[int, list[float]] = {
        c: [] for c in set(partition.assignment.values())
    }
    for e in g.edges:
        by_community[partition.assignment[e.from_cell]].append(e.avg_speed)

    summaries = []
    for cid in sorted(by_community):
        speeds = by_community[cid]
        if not speeds:
            summaries.append(CommunitySpeedSummary(cid, 0, None, None, None, None, None))
            continue
        arr = np.asarray(speeds, dtype=np.float64)
        q1, q3 = np.percentile(arr, [25.0, 75.0])
        summaries.append(
            CommunitySpeedSummary(
                community_id=cid,
                edge_count=len(speeds),
                minimum=float(arr.min()),
                q1=float(q1),
                mean=float(arr.mean()),
                q3=float(q3),
                maximum=float(arr.max()),
            )
        )
    return summaries
