"""JIT-compiled CSR graph kernels.

All hot per-source loops (Dijkstra with a binary heap, BFS, dependency
accumulation) run inside ``@njit`` functions over preallocated arrays.
Path counts are accumulated as float64, matching the numpy backend.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def _heap_push(keys, vals, size, key, val):
    keys[size] = key
    vals[size] = val
    i = size
    while i > 0:
        parent = (i - 1) // 2
        if keys[parent] <= keys[i]:
            break
        keys[parent], keys[i] = keys[i], keys[parent]
        vals[parent], vals[i] = vals[i], vals[parent]
        i = parent
    return size + 1


@njit(cache=True)
def _heap_pop(keys, vals, size):
    key = keys[0]
    val = vals[0]
    size -= 1
    keys[0] = keys[size]
    vals[0] = vals[size]
    i = 0
    while True:
        left = 2 * i + 1
        right = left + 1
        smallest = i
        if left < size and keys[left] < keys[smallest]:
            smallest = left
        if right < size and keys[right] < keys[smallest]:
            smallest = right
        if smallest == i:
            break
        keys[smallest], keys[i] = keys[i], keys[smallest]
        vals[smallest], vals[i] = vals[i], vals[smallest]
        i = smallest
    return key, val, size


@njit(cache=True)
def brandes_weighted(indptr, indices, cost, n):
    """Betweenness with edge costs; one Dijkstra per source.

    Shortest-path ties are detected by exact float equality, which is
    consistent because the accumulation phase recomputes dist[u] + cost
    with the same operands as the relaxation that set dist[w].
    """
    bc = np.zeros(n, dtype=np.float64)
    if n == 0:
        return bc
    m = indices.shape[0]
    dist = np.empty(n, dtype=np.float64)
    sigma = np.empty(n, dtype=np.float64)
    delta = np.empty(n, dtype=np.float64)
    settled = np.empty(n, dtype=np.bool_)
    order = np.empty(n, dtype=np.int64)
    heap_keys = np.empty(m + n + 1, dtype=np.float64)
    heap_vals = np.empty(m + n + 1, dtype=np.int64)

    for s in range(n):
        for i in range(n):
            dist[i] = np.inf
            sigma[i] = 0.0
            delta[i] = 0.0
            settled[i] = False
        dist[s] = 0.0
        sigma[s] = 1.0
        heap_size = _heap_push(heap_keys, heap_vals, 0, 0.0, s)
        count = 0
        while heap_size > 0:
            d, u, heap_size = _heap_pop(heap_keys, heap_vals, heap_size)
            if settled[u]:
                continue
            settled[u] = True
            order[count] = u
            count += 1
            for e in range(indptr[u], indptr[u + 1]):
                w = indices[e]
                nd = d + cost[e]
                if nd < dist[w]:
                    dist[w] = nd
                    sigma[w] = sigma[u]
                    heap_size = _heap_push(heap_keys, heap_vals, heap_size, nd, w)
                elif nd == dist[w]:
                    sigma[w] += sigma[u]
        for k in range(count - 1, -1, -1):
            u = order[k]
            for e in range(indptr[u], indptr[u + 1]):
                w = indices[e]
                if dist[u] + cost[e] == dist[w]:
                    delta[u] += sigma[u] / sigma[w] * (1.0 + delta[w])
            if u != s:
                bc[u] += delta[u]
    return bc


@njit(cache=True)
def brandes_unweighted(indptr, indices, n):
    """Betweenness with unit edge costs; one BFS per source."""
    bc = np.zeros(n, dtype=np.float64)
    if n == 0:
        return bc
    dist = np.empty(n, dtype=np.int64)
    sigma = np.empty(n, dtype=np.float64)
    delta = np.empty(n, dtype=np.float64)
    queue = np.empty(n, dtype=np.int64)

    for s in range(n):
        for i in range(n):
            dist[i] = -1
            sigma[i] = 0.0
            delta[i] = 0.0
        dist[s] = 0
        sigma[s] = 1.0
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[u]
            for e in range(indptr[u], indptr[u + 1]):
                w = indices[e]
                if dist[w] < 0:
                    dist[w] = du + 1
                    queue[tail] = w
                    tail += 1
                if dist[w] == du + 1:
                    sigma[w] += sigma[u]
        for k in range(tail - 1, -1, -1):
            u = queue[k]
            for e in range(indptr[u], indptr[u + 1]):
                w = indices[e]
                if dist[w] == dist[u] + 1:
                    delta[u] += sigma[u] / sigma[w] * (1.0 + delta[w])
            if u != s:
                bc[u] += delta[u]
    return bc


@njit(cache=True)
def hop_distance_stats(indptr, indices, n):
    """Sum of BFS hop distances and count of ordered reachable pairs."""
    total = 0.0
    pairs = 0
    if n == 0:
        return total, pairs
    dist = np.empty(n, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    for s in range(n):
        for i in range(n):
            dist[i] = -1
        dist[s] = 0
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            for e in range(indptr[u], indptr[u + 1]):
                w = indices[e]
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue[tail] = w
                    tail += 1
        for w in range(n):
            if w != s and dist[w] > 0:
                total += dist[w]
                pairs += 1
    return total, pairs
