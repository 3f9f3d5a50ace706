"""Rolling time windows and per-window spatial activity graphs.

A window is a half-open minute interval [start, start+width). One directed
graph is built per window: grid cells visited in the window are the nodes,
and all same-window movements between an ordered cell pair are merged into
a single weighted edge carrying the distinct set of players, the mean
speed and the number of merged actions. Self-loops (movements within one
cell) are kept; they are real activity even though they can never lie on a
shortest path.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .grid import CellAnnotatedAction


@dataclass(frozen=True)
class TimeWindow:
    """Half-open interval [start, end) in minutes from match start."""

    start: float
    end: float

    def __post_init__(self):
        if self.end <= self.start:
            raise ValueError("window end must be after start")

    def contains_seconds(self, t_seconds: float) -> bool:
        return self.start * 60.0 <= t_seconds < self.end * 60.0


@dataclass(frozen=True)
class AggregatedEdge:
    """All same-window movements between one ordered cell pair."""

    from_cell: int
    to_cell: int
    players: frozenset[int]
    avg_speed: float
    action_count: int


@dataclass(frozen=True)
class SpatialActivityGraph:
    """Directed snapshot of activity within one time window."""

    window: TimeWindow
    nodes: frozenset[int]
    edges: tuple[AggregatedEdge, ...]

    @property
    def edge_count_with_loops(self) -> int:
        return len(self.edges)

    def self_loops(self) -> list[AggregatedEdge]:
        return [e for e in self.edges if e.from_cell == e.to_cell]


@dataclass(frozen=True)
class GraphSeries:
    """The window-ordered sequence of activity graphs for one match."""

    graphs: tuple[SpatialActivityGraph, ...]

    def __len__(self) -> int:
        return len(self.graphs)

    def __iter__(self):
        return iter(self.graphs)


def generate_windows(match_duration: float, width: float, step: float) -> list[TimeWindow]:
    """Rolling windows [k*step, k*step+width) covering the match.

    Count is floor((duration - width) / step) + 1, so the last window ends
    at or before the match end.
    """
    if step <= 0:
        raise ValueError("step must be positive")
    if width <= 0:
        raise ValueError("width must be positive")
    if width > match_duration:
        raise ValueError("window width exceeds match duration")
    count = int((match_duration - width) / step) + 1
    return [TimeWindow(k * step, k * step + width) for k in range(count)]


def build_graph(
    annotated: Sequence[CellAnnotatedAction],
    window: TimeWindow,
    speed_weighting: str = "uniform",
) -> SpatialActivityGraph:
    """Aggregate the actions starting inside ``window`` into one graph.

    An action contributes iff its start_time (seconds) falls in the
    half-open window. ``speed_weighting`` selects how the merged edge speed
    is computed: "uniform" is the plain mean over contributing actions,
    "duration" weights each action's speed by its duration.
    """
    if speed_weighting not in ("uniform", "duration"):
        raise ValueError(f"unknown speed weighting: {speed_weighting}")
    lo, hi = window.start * 60.0, window.end * 60.0
    starts = np.array([a.action.start_time for a in annotated], dtype=np.float64)
    selected = np.nonzero((starts >= lo) & (starts < hi))[0]

    # keyed by (from, to); values accumulate in input order for determinism
    groups: dict[tuple[int, int], list[CellAnnotatedAction]] = {}
    for i in selected:
        a = annotated[int(i)]
        groups.setdefault((a.start_cell, a.end_cell), []).append(a)

    edges = []
    nodes: set[int] = set()
    for (src, dst) in sorted(groups):
        members = groups[(src, dst)]
        if speed_weighting == "duration" and sum(m.action.duration for m in members) > 0:
            total = sum(m.action.duration for m in members)
            speed = sum(m.action.avg_speed * m.action.duration for m in members) / total
        else:
            speed = sum(m.action.avg_speed for m in members) / len(members)
        edges.append(
            AggregatedEdge(
                from_cell=src,
                to_cell=dst,
                players=frozenset(m.action.player_id for m in members),
                avg_speed=speed,
                action_count=len(members),
            )
        )
        nodes.add(src)
        nodes.add(dst)
    return SpatialActivityGraph(window, frozenset(nodes), tuple(edges))


def build_series(
    annotated: Sequence[CellAnnotatedAction],
    windows: Sequence[TimeWindow],
    speed_weighting: str = "uniform",
) -> GraphSeries:
    """One graph per window, preserving window order."""
    return GraphSeries(tuple(build_graph(annotated, w, speed_weighting) for w in windows))


def graph_to_dict(g: SpatialActivityGraph) -> dict:
    """JSON-ready form with sorted nodes, edges and player lists."""
    return {
        "window": {"start": g.window.start, "end": g.window.end},
        "nodes": sorted(g.nodes),
        "edges": [
            {
                "from": e.from_cell,
                "to": e.to_cell,
                "players": sorted(e.players),
                "avg_speed": e.avg_speed,
                "count": e.action_count,
            }
            for e in g.edges
        ],
    }


def series_to_json(series: GraphSeries) -> str:
    """Byte-stable serialization of a whole series (keys sorted)."""
    return json.dumps([graph_to_dict(g) for g in series.graphs], sort_keys=True, indent=1)
