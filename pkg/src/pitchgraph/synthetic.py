"""Deterministic synthetic match generator.

Real tracking datasets are proprietary, so tests and demos run on
generated matches with a known structure. Players move between waypoints
inside a rectangular pitch; each movement becomes one action record with a
label-dependent speed. Scenarios plant recoverable ground truth:

* ``uniform``   — unconstrained wandering, no planted structure.
* ``two_zones`` — players confined to two pitch halves separated by a
  buffer strip; cross-half actions only at a configured (rare) rate, so
  the halves form two communities.
* ``bridge``    — like two_zones but crossings are frequent and always
  routed through one gate point, making its cell the unique cut between
  the halves (maximal betweenness).
* ``corridor``  — free movement, but actions starting inside one band of
  the pitch are fast (Running/Sprinting) while the rest are slow.

The same seed always produces byte-identical CSV output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .grid import PlanarPoint, planar_to_geo
from .ingest import ActionRecord, GeoCoordinate

SCENARIOS = ("uniform", "two_zones", "bridge", "corridor")

PROJECTION_ORIGIN = GeoCoordinate(54.0, -7.0)

# (mean, stddev) of speed in m/s per action label
DEFAULT_SPEED_MODEL: dict[str, tuple[float, float]] = {
    "Walking": (1.2, 0.25),
    "Jogging": (2.4, 0.4),
    "Running": (4.0, 0.6),
    "Sprinting": (7.2, 0.7),
}
DEFAULT_LABEL_WEIGHTS: dict[str, float] = {
    "Walking": 0.50,
    "Jogging": 0.28,
    "Running": 0.17,
    "Sprinting": 0.05,
}
SPEED_FLOOR = 0.1
SPEED_CEIL = 9.5

# buffer strip between the halves; wider than the default cell size so no
# visited cell can collect points from both halves
ZONE_GAP = 16.0
CORRIDOR_BAND = 25.0

_CROSSING_DEFAULTS = {"two_zones": 0.0003, "bridge": 0.012}


@dataclass
class ScenarioSpec:
    scenario: str = "uniform"
    players: int = 15
    duration_min: float = 78.0
    pitch_length: float = 140.0
    pitch_width: float = 85.0
    seed: int = 0
    action_rate: float = 11.6
    speed_model: dict[str, tuple[float, float]] = field(
        default_factory=lambda: dict(DEFAULT_SPEED_MODEL)
    )
    crossing_rate: float | None = None

    def validate(self) -> None:
        if self.scenario not in SCENARIOS:
            raise ValueError(f"unknown scenario: {self.scenario}")
        if self.players < 1:
            raise ValueError("players must be >= 1")
        if self.duration_min <= 0:
            raise ValueError("duration must be positive")
        for dim in (self.pitch_length, self.pitch_width):
            if not 50.0 <= dim <= 200.0:
                raise ValueError("pitch dimensions must lie in [50, 200] m")
        if self.action_rate < 0:
            raise ValueError("action_rate must be >= 0")

    @property
    def half_boundary_x(self) -> float:
        return self.pitch_length / 2.0

    @property
    def gate_point(self) -> tuple[float, float]:
        return (self.pitch_length / 2.0, self.pitch_width / 2.0)

    @property
    def corridor_band(self) -> tuple[float, float]:
        return (self.pitch_width - CORRIDOR_BAND, self.pitch_width)

    def effective_crossing_rate(self) -> float:
        if self.crossing_rate is not None:
            return self.crossing_rate
        return _CROSSING_DEFAULTS.get(self.scenario, 0.0)


def _zone_bounds(spec: ScenarioSpec, half: int) -> tuple[float, float, float, float]:
    """(x_min, x_max, y_min, y_max) of a player's allowed rectangle."""
    if spec.scenario in ("two_zones", "bridge"):
        if half == 0:
            return (0.0, spec.half_boundary_x - ZONE_GAP / 2, 0.0, spec.pitch_width)
        return (spec.half_boundary_x + ZONE_GAP / 2, spec.pitch_length, 0.0, spec.pitch_width)
    return (0.0, spec.pitch_length, 0.0, spec.pitch_width)


def _draw_point(rng: np.random.Generator, bounds) -> tuple[float, float]:
    x0, x1, y0, y1 = bounds
    return (rng.uniform(x0, x1), rng.uniform(y0, y1))


def _draw_speed(rng: np.random.Generator, spec: ScenarioSpec, label: str) -> float:
    mean, sd = spec.speed_model[label]
    return float(min(SPEED_CEIL, max(SPEED_FLOOR, rng.normal(mean, sd))))


def _pick_label(rng: np.random.Generator, weights: dict[str, float]) -> str:
    labels = list(weights)
    p = np.array([weights[l] for l in labels], dtype=np.float64)
    return labels[int(rng.choice(len(labels), p=p / p.sum()))]


def _corridor_label(rng: np.random.Generator) -> str:
    return "Running" if rng.random() < 0.6 else "Sprinting"


def _record(spec, player, t0, t1, p0, p1, speed, label) -> ActionRecord:
    g0 = planar_to_geo(PlanarPoint(*p0), PROJECTION_ORIGIN)
    g1 = planar_to_geo(PlanarPoint(*p1), PROJECTION_ORIGIN)
    return ActionRecord(
        player_id=player,
        start_time=t0,
        end_time=t1,
        start_coord=g0,
        end_coord=g1,
        avg_speed=speed,
        action_label=label,
        duration=t1 - t0,
    )


def _player_actions(spec: ScenarioSpec, player: int, rng: np.random.Generator) -> list[ActionRecord]:
    if spec.action_rate <= 0:
        return []
    duration_s = spec.duration_min * 60.0
    mean_slot = 60.0 / spec.action_rate
    mean_gap = min(0.4, 0.08 * mean_slot)
    mean_action = mean_slot - mean_gap
    crossing_rate = spec.effective_crossing_rate()
    zoned = spec.scenario in ("two_zones", "bridge")
    corridor = spec.scenario == "corridor"
    band_lo, band_hi = spec.corridor_band

    half = (player - 1) % 2 if zoned else 0
    pos = _draw_point(rng, _zone_bounds(spec, half))
    target: tuple[float, float] | None = None
    actions: list[ActionRecord] = []
    t = 0.0

    while True:
        gap = rng.exponential(mean_gap)
        dur = min(4.0 * mean_action, max(0.6, rng.gamma(4.0, mean_action / 4.0)))
        t0 = t + gap
        if t0 + dur > duration_s:
            break

        if zoned and rng.random() < crossing_rate:
            # deliberate half change; bridge routes it through the gate
            other = 1 - half
            dest = _draw_point(rng, _zone_bounds(spec, other))
            legs = []
            if spec.scenario == "bridge":
                legs.append(spec.gate_point)
            legs.append(dest)
            ok = True
            cursor_t, cursor_p = t0, pos
            planned = []
            for leg in legs:
                speed = _draw_speed(rng, spec, "Running")
                dist = math.hypot(leg[0] - cursor_p[0], leg[1] - cursor_p[1])
                leg_dur = max(0.6, dist / speed)
                if cursor_t + leg_dur > duration_s:
                    ok = False
                    break
                planned.append((cursor_t, cursor_t + leg_dur, cursor_p, leg, speed))
                cursor_t += leg_dur
                cursor_p = leg
            if not ok:
                break
            for (a0, a1, p0, p1, speed) in planned:
                actions.append(_record(spec, player, a0, a1, p0, p1, speed, "Running"))
            t = cursor_t
            pos = cursor_p
            half = other
            target = None
            continue

        if target is None:
            target = _draw_point(rng, _zone_bounds(spec, half))
        if corridor:
            label = _corridor_label(rng) if band_lo <= pos[1] <= band_hi else _pick_label(
                rng, {"Walking": 0.75, "Jogging": 0.25}
            )
        else:
            label = _pick_label(rng, DEFAULT_LABEL_WEIGHTS)
        speed = _draw_speed(rng, spec, label)
        step = speed * dur
        dist = math.hypot(target[0] - pos[0], target[1] - pos[1])
        if step >= dist or dist == 0.0:
            end = target
            target = None
        else:
            f = step / dist
            end = (pos[0] + f * (target[0] - pos[0]), pos[1] + f * (target[1] - pos[1]))
        actions.append(_record(spec, player, t0, t0 + dur, pos, end, speed, label))
        pos = end
        t = t0 + dur
    return actions


def generate(spec: ScenarioSpec) -> list[ActionRecord]:
    """All action records of one synthetic match, chronologically ordered."""
    spec.validate()
    rng = np.random.default_rng(spec.seed)
    records: list[ActionRecord] = []
    for player in range(1, spec.players + 1):
        records.extend(_player_actions(spec, player, rng))
    records.sort(key=lambda r: (r.start_time, r.player_id))
    return records


def ground_truth(spec: ScenarioSpec) -> dict:
    """Machine-readable description of the structure planted by a scenario."""
    spec.validate()
    info: dict = {
        "scenario": spec.scenario,
        "players": spec.players,
        "duration_min": spec.duration_min,
        "pitch_length": spec.pitch_length,
        "pitch_width": spec.pitch_width,
        "seed": spec.seed,
        "projection_origin": {"lat": PROJECTION_ORIGIN.lat, "lon": PROJECTION_ORIGIN.lon},
    }
    if spec.scenario in ("two_zones", "bridge"):
        info["half_boundary_x"] = spec.half_boundary_x
        info["zone_gap"] = ZONE_GAP
        info["crossing_rate"] = spec.effective_crossing_rate()
    if spec.scenario == "two_zones":
        info["expected_communities"] = 2
    if spec.scenario == "bridge":
        gx, gy = spec.gate_point
        gate_geo = planar_to_geo(PlanarPoint(gx, gy), PROJECTION_ORIGIN)
        info["bridge_cell"] = {"x": gx, "y": gy, "lat": gate_geo.lat, "lon": gate_geo.lon}
    if spec.scenario == "corridor":
        lo, hi = spec.corridor_band
        info["corridor_cells"] = {"y_min": lo, "y_max": hi}
    return info
