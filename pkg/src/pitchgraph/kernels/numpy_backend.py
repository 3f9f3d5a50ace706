"""Pure-numpy fallback kernels.

Same contracts as the numba backend. Graphs here are small enough
(hundreds of nodes) that dense adjacency plus vectorized relaxation is a
reasonable trade: the per-source loops stay in Python but every inner step
is a whole-array operation.
"""

import numpy as np


def _dense_cost(indptr, indices, cost, n):
    c = np.full((n, n), np.inf, dtype=np.float64)
    for u in range(n):
        lo, hi = indptr[u], indptr[u + 1]
        c[u, indices[lo:hi]] = cost[lo:hi]
    return c


def _dense_adjacency(indptr, indices, n):
    a = np.zeros((n, n), dtype=bool)
    for u in range(n):
        a[u, indices[indptr[u]:indptr[u + 1]]] = True
    return a


def brandes_weighted(indptr, indices, cost, n):
    """Betweenness with edge costs; dense Dijkstra per source."""
    bc = np.zeros(n, dtype=np.float64)
    if n == 0:
        return bc
    c = _dense_cost(indptr, indices, cost, n)
    for s in range(n):
        dist = np.full(n, np.inf)
        sigma = np.zeros(n)
        settled = np.zeros(n, dtype=bool)
        dist[s] = 0.0
        sigma[s] = 1.0
        order = []
        for _ in range(n):
            candidate = np.where(settled, np.inf, dist)
            u = int(np.argmin(candidate))
            if not np.isfinite(candidate[u]):
                break
            settled[u] = True
            order.append(u)
            nd = dist[u] + c[u]
            eq = np.isfinite(nd) & (nd == dist) & ~settled
            sigma[eq] += sigma[u]
            lt = nd < dist
            sigma[lt] = sigma[u]
            dist[lt] = nd[lt]
        delta = np.zeros(n)
        for u in reversed(order):
            lo, hi = indptr[u], indptr[u + 1]
            w = indices[lo:hi]
            if w.size:
                on_sp = dist[u] + cost[lo:hi] == dist[w]
                if on_sp.any():
                    ws = w[on_sp]
                    delta[u] += np.sum(sigma[u] / sigma[ws] * (1.0 + delta[ws]))
        delta[s] = 0.0
        bc += delta
    return bc


def brandes_unweighted(indptr, indices, n):
    """Betweenness with unit costs; frontier BFS per source."""
    bc = np.zeros(n, dtype=np.float64)
    if n == 0:
        return bc
    a = _dense_adjacency(indptr, indices, n).astype(np.float64)
    for s in range(n):
        dist = np.full(n, -1, dtype=np.int64)
        sigma = np.zeros(n)
        dist[s] = 0
        sigma[s] = 1.0
        frontier = np.zeros(n, dtype=bool)
        frontier[s] = True
        level = 0
        while frontier.any():
            contrib = (sigma * frontier) @ a
            new = (contrib > 0) & (dist < 0)
            level += 1
            dist[new] = level
            sigma[new] = contrib[new]
            frontier = new
        delta = np.zeros(n)
        for u in np.argsort(dist)[::-1]:
            if dist[u] < 0:
                continue
            lo, hi = indptr[u], indptr[u + 1]
            w = indices[lo:hi]
            if w.size:
                on_sp = dist[w] == dist[u] + 1
                if on_sp.any():
                    ws = w[on_sp]
                    delta[u] += np.sum(sigma[u] / sigma[ws] * (1.0 + delta[ws]))
        delta[s] = 0.0
        bc += delta
    return bc


def hop_distance_stats(indptr, indices, n):
    """All-pairs BFS at once through boolean frontier matrices."""
    if n == 0:
        return 0.0, 0
    a = _dense_adjacency(indptr, indices, n)
    dist = np.full((n, n), -1, dtype=np.int64)
    np.fill_diagonal(dist, 0)
    frontier = np.eye(n, dtype=bool)
    visited = frontier.copy()
    level = 0
    while frontier.any():
        reached = (frontier.astype(np.uint8) @ a.astype(np.uint8)) > 0
        nxt = reached & ~visited
        level += 1
        dist[nxt] = level
        visited |= nxt
        frontier = nxt
    reachable = dist > 0
    return float(dist[reachable].sum()), int(reachable.sum())
