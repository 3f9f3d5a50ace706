"""Per-window descriptive graph statistics.

Conventions: edge_count and everything derived from it exclude self-loops
(their count is reported separately); density uses the directed formula
E / (N*(N-1)); the clustering coefficient is computed on the undirected,
unweighted projection; the average shortest path is the mean hop distance
over ordered reachable pairs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .. import kernels
from ..snapshots import SpatialActivityGraph, TimeWindow
from .adjacency import csr_arrays, node_index


@dataclass(frozen=True)
class GraphStats:
    window: TimeWindow
    node_count: int
    edge_count: int
    self_loop_count: int
    avg_edge_weight: float
    density: float
    avg_degree: float
    avg_clustering_coefficient: float
    avg_shortest_path: float


def _avg_clustering(g: SpatialActivityGraph) -> float:
    nodes, index = node_index(g)
    n = len(nodes)
    if n == 0:
        return 0.0
    b = np.zeros((n, n), dtype=bool)
    for e in g.edges:
        if e.from_cell == e.to_cell:
            continue
        i, j = index[e.from_cell], index[e.to_cell]
        b[i, j] = True
        b[j, i] = True
    deg = b.sum(axis=1)
    bi = b.astype(np.int64)
    # (bi @ bi)[i, j] counts common neighbors; masking by b and summing
    # over j counts each neighbor-neighbor edge of i twice.
    wedge = ((bi @ bi) * b).sum(axis=1)
    coeff = np.zeros(n)
    eligible = deg >= 2
    coeff[eligible] = wedge[eligible] / (deg[eligible] * (deg[eligible] - 1))
    return float(coeff.mean())


def graph_stats(g: SpatialActivityGraph) -> GraphStats:
    n = len(g.nodes)
    non_loop = [e for e in g.edges if e.from_cell != e.to_cell]
    e_count = len(non_loop)
    loops = len(g.edges) - e_count
    avg_weight = sum(e.avg_speed for e in non_loop) / e_count if e_count else 0.0
    density = e_count / (n * (n - 1)) if n > 1 else 0.0
    avg_degree = 2.0 * e_count / n if n else 0.0

    if n:
        indptr, indices, _ = csr_arrays(g)
        total, pairs = kernels.hop_distance_stats(indptr, indices, n)
        avg_sp = total / pairs if pairs else 0.0
    else:
        avg_sp = 0.0

    return GraphStats(
        window=g.window,
        node_count=n,
        edge_count=e_count,
        self_loop_count=loops,
        avg_edge_weight=avg_weight,
        density=density,
        avg_degree=avg_degree,
        avg_clustering_coefficient=_avg_clustering(g),
        avg_shortest_path=avg_sp,
    )
