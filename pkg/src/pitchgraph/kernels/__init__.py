"""Backend selection for the hot graph kernels.

Two interchangeable implementations exist:

* ``numba_backend`` — ``@njit``-compiled CSR kernels (default when numba
  imports cleanly).
* ``numpy_backend`` — pure-numpy fallback, no compilation step.

The active backend is chosen once at import from the ``PITCHGRAPH_BACKEND``
environment variable ("numba", "numpy" or "auto") and can be switched at
runtime with :func:`use_backend` (used by tests and the benchmark).

All kernels share one calling convention: the graph is a CSR triple
``(indptr, indices, cost)`` over dense node indices ``0..n-1`` with
self-loops already removed.
"""

from __future__ import annotations

import os

from . import numpy_backend

try:
    from . import numba_backend

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    numba_backend = None
    HAVE_NUMBA = False

ENV_VAR = "PITCHGRAPH_BACKEND"
_BACKENDS = {"numpy": numpy_backend}
if HAVE_NUMBA:
    _BACKENDS["numba"] = numba_backend


def _resolve(name: str):
    name = name.strip().lower()
    if name in ("", "auto"):
        return "numba" if HAVE_NUMBA else "numpy"
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}; use 'numba', 'numpy' or 'auto'")
    if name == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba backend requested but numba is not importable")
    return name


_active_name = _resolve(os.environ.get(ENV_VAR, "auto"))


def active_backend() -> str:
    """Name of the backend currently serving kernel calls."""
    return _active_name


def available_backends() -> list[str]:
    return sorted(_BACKENDS)


def use_backend(name: str) -> str:
    """Switch the active backend; returns the resolved name."""
    global _active_name
    _active_name = _resolve(name)
    return _active_name


def get_backend(name: str | None = None):
    """The backend module itself (for direct use in tests/benchmarks)."""
    return _BACKENDS[_resolve(name) if name is not None else _active_name]


def brandes_weighted(indptr, indices, cost, n):
    """Unnormalized betweenness over positive edge costs (Dijkstra-based)."""
    return get_backend().brandes_weighted(indptr, indices, cost, n)


def brandes_unweighted(indptr, indices, n):
    """Unnormalized betweenness over hop counts (BFS-based)."""
    return get_backend().brandes_unweighted(indptr, indices, n)


def hop_distance_stats(indptr, indices, n):
    """(sum of hop distances, number of ordered reachable pairs s != t)."""
    return get_backend().hop_distance_stats(indptr, indices, n)


def warmup() -> None:
    """Force JIT compilation on a tiny graph so timings stay honest."""
    import numpy as np

    indptr = np.array([0, 1, 2], dtype=np.int64)
    indices = np.array([1, 0], dtype=np.int64)
    cost = np.array([1.0, 1.0], dtype=np.float64)
    backend = get_backend()
    backend.brandes_weighted(indptr, indices, cost, 2)
    backend.brandes_unweighted(indptr, indices, 2)
    backend.hop_distance_stats(indptr, indices, 2)
