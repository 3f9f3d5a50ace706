"""Pipeline configuration: defaults, config-file parsing, CLI merging.

Config files are plain ``key = value`` lines ('#' starts a comment); the
keys mirror the CLI flags one-to-one and CLI values win over file values.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields
from pathlib import Path


@dataclass
class PipelineConfig:
    input: Path | None = None
    output: Path | None = None
    resolution: float = 10.0
    window_width: float = 5.0
    window_step: float = 1.0
    duration_min: float | None = None  # inferred from the data when None
    betweenness_mode: str = "weighted"
    betweenness_normalized: bool = False
    louvain_seed: int = 0
    margin: float = 2.0
    # lat1,lon1,lat2,lon2 corners of a fixed area of interest
    poi_box: tuple[float, float, float, float] | None = None
    speed_weighting: str = "uniform"
    render: bool = False
    write_graphs: bool = True

    def problems(self) -> list[str]:
        errors = []
        if self.resolution <= 0:
            errors.append("resolution must be positive")
        if self.window_width <= 0:
            errors.append("window width must be positive")
        if self.window_step <= 0:
            errors.append("window step must be positive")
        if self.duration_min is not None and self.duration_min <= 0:
            errors.append("duration must be positive")
        if self.betweenness_mode not in ("weighted", "unweighted"):
            errors.append(f"unknown betweenness mode: {self.betweenness_mode}")
        if self.speed_weighting not in ("uniform", "duration"):
            errors.append(f"unknown speed weighting: {self.speed_weighting}")
        if self.margin < 0:
            errors.append("margin must be >= 0")
        return errors

    def analysis_params(self) -> dict:
        """The analytic knobs only (no file paths), for the run echo."""
        return {
            "resolution": self.resolution,
            "window_width": self.window_width,
            "window_step": self.window_step,
            "duration_min": self.duration_min,
            "betweenness_mode": self.betweenness_mode,
            "betweenness_normalized": self.betweenness_normalized,
            "louvain_seed": self.louvain_seed,
            "margin": self.margin,
            "poi_box": list(self.poi_box) if self.poi_box else None,
            "speed_weighting": self.speed_weighting,
        }


_BOOL_KEYS = {"betweenness_normalized", "render", "write_graphs"}
_FLOAT_KEYS = {"resolution", "window_width", "window_step", "duration_min", "margin"}
_INT_KEYS = {"louvain_seed"}
_PATH_KEYS = {"input", "output"}


def _parse_value(key: str, raw: str):
    raw = raw.strip()
    if key in _BOOL_KEYS:
        if raw.lower() in ("true", "yes", "1", "on"):
            return True
        if raw.lower() in ("false", "no", "0", "off"):
            return False
        raise ValueError(f"{key}: expected a boolean, got {raw!r}")
    if key in _FLOAT_KEYS:
        return float(raw)
    if key in _INT_KEYS:
        return int(raw)
    if key in _PATH_KEYS:
        return Path(raw)
    if key == "poi_box":
        parts = [float(p) for p in raw.split(",")]
        if len(parts) != 4:
            raise ValueError("poi_box: expected lat1,lon1,lat2,lon2")
        return tuple(parts)
    return raw


def load_config_file(path: Path) -> PipelineConfig:
    """Read a key=value config file into a PipelineConfig."""
    known = {f.name for f in fields(PipelineConfig)}
    config = PipelineConfig()
    for lineno, line in enumerate(path.read_text().splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected 'key = value'")
        key, raw = (s.strip() for s in line.split("=", 1))
        if key not in known:
            raise ValueError(f"{path}:{lineno}: unknown config key {key!r}")
        setattr(config, key, _parse_value(key, raw))
    return config


def merge_overrides(config: PipelineConfig, overrides: dict) -> PipelineConfig:
    """Apply non-None override values (CLI flags) on top of a config."""
    for key, value in overrides.items():
        if value is not None:
            setattr(config, key, value)
    return config
