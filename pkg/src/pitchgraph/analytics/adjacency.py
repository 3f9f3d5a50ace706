"""Array forms of a spatial activity graph shared by the analytics.

Cell ids are arbitrary integers; everything here maps them onto the dense
index space 0..n-1 (sorted cell id order) expected by the kernels.
Self-loops are excluded from path-based structures and kept for the
modularity adjacency.
"""

from __future__ import annotations

import numpy as np

from ..snapshots import SpatialActivityGraph


def node_index(g: SpatialActivityGraph) -> tuple[list[int], dict[int, int]]:
    nodes = sorted(g.nodes)
    return nodes, {c: i for i, c in enumerate(nodes)}


def csr_arrays(
    g: SpatialActivityGraph, weights: np.ndarray | None = None
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """CSR (indptr, indices, data) over dense indices, self-loops dropped.

    ``weights`` supplies per-edge data aligned with ``g.edges``; by default
    the edge's avg_speed is used.
    """
    nodes, index = node_index(g)
    n = len(nodes)
    by_source: list[list[tuple[int, float]]] = [[] for _ in range(n)]
    for k, e in enumerate(g.edges):
        if e.from_cell == e.to_cell:
            continue
        w = float(weights[k]) if weights is not None else e.avg_speed
        by_source[index[e.from_cell]].append((index[e.to_cell], w))
    indptr = np.zeros(n + 1, dtype=np.int64)
    idx: list[int] = []
    data: list[float] = []
    for u in range(n):
        row = sorted(by_source[u])
        idx.extend(t for t, _ in row)
        data.extend(w for _, w in row)
        indptr[u + 1] = len(idx)
    return indptr, np.array(idx, dtype=np.int64), np.array(data, dtype=np.float64)


def symmetrized_weights(g: SpatialActivityGraph) -> tuple[list[int], list[dict[int, float]]]:
    """Undirected weighted adjacency for modularity.

    Off-diagonal entries sum the two directed weights and are stored in
    both row dicts; a self-loop contributes its weight once on the
    diagonal. Degrees are therefore row sums including the diagonal.
    """
    nodes, index = node_index(g)
    adj: list[dict[int, float]] = [dict() for _ in nodes]
    for e in g.edges:
        i, j = index[e.from_cell], index[e.to_cell]
        if i == j:
            adj[i][i] = adj[i].get(i, 0.0) + e.avg_speed
        else:
            adj[i][j] = adj[i].get(j, 0.0) + e.avg_speed
            adj[j][i] = adj[j].get(i, 0.0) + e.avg_speed
    return nodes, adj
