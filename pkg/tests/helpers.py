"""Shared builders for hand-made graphs and random test instances."""

from __future__ import annotations

import numpy as np

from pitchgraph.snapshots import AggregatedEdge, SpatialActivityGraph, TimeWindow

DYADIC_SPEEDS = (0.25, 0.5, 1.0, 2.0, 4.0)


def make_graph(
    edges: dict[tuple[int, int], float],
    nodes=None,
    window: tuple[float, float] = (0.0, 5.0),
) -> SpatialActivityGraph:
    """Graph from a (u, v) -> avg_speed mapping; nodes inferred by default."""
    inferred = set()
    for u, v in edges:
        inferred.add(u)
        inferred.add(v)
    if nodes is not None:
        inferred |= set(nodes)
    built = tuple(
        AggregatedEdge(
            from_cell=u,
            to_cell=v,
            players=frozenset({1}),
            avg_speed=speed,
            action_count=1,
        )
        for (u, v), speed in sorted(edges.items())
    )
    return SpatialActivityGraph(TimeWindow(*window), frozenset(inferred), built)


def random_edge_map(
    rng: np.random.Generator,
    n: int,
    p: float,
    speeds=DYADIC_SPEEDS,
    self_loops: bool = False,
) -> dict[tuple[int, int], float]:
    """Random directed edges over nodes 0..n-1 with speeds from ``speeds``."""
    edges = {}
    for u in range(n):
        for v in range(n):
            if u == v and not self_loops:
                continue
            if rng.random() < p:
                if speeds is None:
                    edges[(u, v)] = float(rng.uniform(0.5, 8.0))
                else:
                    edges[(u, v)] = float(speeds[rng.integers(len(speeds))])
    return edges


def random_graph(
    rng: np.random.Generator,
    n: int,
    p: float,
    speeds=DYADIC_SPEEDS,
    self_loops: bool = False,
) -> SpatialActivityGraph:
    return make_graph(random_edge_map(rng, n, p, speeds, self_loops))
