#!/usr/bin/env python3
"""Benchmark: numba kernels vs the pure-numpy fallback.

Builds a realistic workload (one synthetic match, default pipeline
settings) and times the per-window hot kernels — weighted/unweighted
betweenness and all-pairs hop statistics — on both backends.

Usage:
    python benchmarks/bench_kernels.py [--windows 20] [--seed 3]

Selecting a backend for a normal pipeline run instead:
    PITCHGRAPH_BACKEND=numpy pitchgraph run ...
"""

import argparse
import time

from pitchgraph import kernels
from pitchgraph.analytics.adjacency import csr_arrays
from pitchgraph.config import PipelineConfig
from pitchgraph.ingest import actions_to_csv
from pitchgraph.pipeline import analyze_source
from pitchgraph.synthetic import ScenarioSpec, generate


def build_workload(seed: int, windows: int):
    records = generate(ScenarioSpec(scenario="uniform", seed=seed))
    _, _, grid, series = analyze_source(actions_to_csv(records), PipelineConfig())
    graphs = list(series)[:windows]
    prepared = []
    for g in graphs:
        indptr, indices, speeds = csr_arrays(g)
        prepared.append((indptr, indices, 1.0 / speeds, len(g.nodes)))
    return len(grid), prepared


def time_backend(name: str, prepared) -> dict[str, float]:
    backend = kernels.get_backend(name)
    if name == "numba":
        kernels.warmup()  # JIT compile outside the timed section
    timings = {}
    t0 = time.perf_counter()
    for indptr, indices, cost, n in prepared:
        backend.brandes_weighted(indptr, indices, cost, n)
    timings["betweenness weighted"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    for indptr, indices, cost, n in prepared:
        backend.brandes_unweighted(indptr, indices, n)
    timings["betweenness unweighted"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    for indptr, indices, cost, n in prepared:
        backend.hop_distance_stats(indptr, indices, n)
    timings["hop distance stats"] = time.perf_counter() - t0
    return timings


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--windows", type=int, default=20,
                        help="number of window graphs to analyze")
    parser.add_argument("--seed", type=int, default=3)
    args = parser.parse_args()

    cells, prepared = build_workload(args.seed, args.windows)
    sizes = [n for _, _, _, n in prepared]
    print(f"workload: {len(prepared)} window graphs, {cells} grid cells, "
          f"{min(sizes)}-{max(sizes)} nodes per graph\n")

    results = {}
    for name in kernels.available_backends():
        results[name] = time_backend(name, prepared)

    kernel_names = list(next(iter(results.values())))
    width = max(len(k) for k in kernel_names)
    header = f"{'kernel':<{width}}  " + "".join(f"{b:>12}" for b in results)
    if len(results) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for k in kernel_names:
        row = f"{k:<{width}}  " + "".join(f"{results[b][k]:>11.3f}s" for b in results)
        if len(results) == 2:
            numba_t = results.get("numba", {}).get(k)
            numpy_t = results.get("numpy", {}).get(k)
            if numba_t and numpy_t:
                row += f"{numpy_t / numba_t:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
