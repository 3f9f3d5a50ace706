"""Betweenness centrality of pitch cells.

In weighted mode an edge's traversal cost is the inverse of its average
speed, so corridors crossed at high speed are "short" and attract shortest
paths; unweighted mode counts hops. Self-loops are ignored (they cannot
lie on a shortest path). Pairs with no connecting path contribute nothing.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .. import kernels
from ..snapshots import SpatialActivityGraph, TimeWindow
from .adjacency import csr_arrays, node_index

MODES = ("weighted", "unweighted")


@dataclass(frozen=True)
class CentralityScores:
    window: TimeWindow
    scores: dict[int, float]
    normalized: bool
    mode: str


def betweenness(
    g: SpatialActivityGraph, mode: str = "weighted", normalize: bool = False
) -> CentralityScores:
    """Brandes betweenness of every node in the window's graph.

    Normalization divides by (N-1)(N-2), the number of ordered pairs a
    node could intermediate in a directed graph; graphs with N <= 2 have
    all-zero scores and are left untouched.
    """
    if mode not in MODES:
        raise ValueError(f"unknown betweenness mode: {mode}")
    nodes, _ = node_index(g)
    n = len(nodes)
    if mode == "weighted":
        for e in g.edges:
            if e.from_cell != e.to_cell and e.avg_speed == 0:
                raise ValueError("zero-speed edge; clean or use unweighted mode")
        indptr, indices, speeds = csr_arrays(g)
        raw = kernels.brandes_weighted(indptr, indices, 1.0 / speeds, n)
    else:
        indptr, indices, _ = csr_arrays(g)
        raw = kernels.brandes_unweighted(indptr, indices, n)
    if normalize and n > 2:
        raw = raw / ((n - 1) * (n - 2))
    return CentralityScores(
        window=g.window,
        scores={c: float(raw[i]) for i, c in enumerate(nodes)},
        normalized=normalize,
        mode=mode,
    )


def normalize_scores(scores: CentralityScores) -> CentralityScores:
    """Normalized copy of raw scores (no recomputation)."""
    if scores.normalized:
        return scores
    n = len(scores.scores)
    factor = (n - 1) * (n - 2) if n > 2 else 1
    return CentralityScores(
        window=scores.window,
        scores={c: s / factor for c, s in scores.scores.items()},
        normalized=True,
        mode=scores.mode,
    )
