"""End-to-end orchestration from an action CSV to the report directory.

Output layout of a run:

    <output>/
      rejections.json        rows dropped at parse/validation, with reasons
      grid.csv               pruned grid (cell_id, centroid lat/lon, x/y)
      graphs.json            serialized activity graph series
      stats.csv              one row per window, Table-style columns
      reports/window_NNN.json   full analytics per window
      render/betweenness_NNN.svg, communities_NNN.svg   (only with render)
      run_params.json        analytic parameters of the run (no paths)

Every artifact is byte-stable: rerunning with identical input and
configuration reproduces identical files.
"""

from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass
from pathlib import Path

from . import grid as gridmod
from . import render as rendermod
from .analytics import (
    betweenness,
    community_speed_summary,
    graph_stats,
    louvain,
)
from .analytics.communities import Partition
from .config import PipelineConfig
from .ingest import GeoCoordinate, parse_actions, validate_and_clean
from .reports import report_to_json, window_report, write_stats_csv
from .snapshots import build_series, generate_windows, series_to_json

logger = logging.getLogger(__name__)


class PipelineError(RuntimeError):
    """A run-stopping data or configuration problem."""


@dataclass
class RunSummary:
    records_read: int
    records_used: int
    rejected: int
    grid_cells: int
    windows: int
    output: Path | None


def _projection_origin(records, config: PipelineConfig) -> GeoCoordinate:
    if config.poi_box is not None:
        lat1, lon1, lat2, lon2 = config.poi_box
        return GeoCoordinate((lat1 + lat2) / 2.0, (lon1 + lon2) / 2.0)
    coords = [r.start_coord for r in records] + [r.end_coord for r in records]
    return gridmod.geo_centroid(coords)


def _bounding_box(records, origin, config: PipelineConfig) -> gridmod.BoundingBox:
    if config.poi_box is not None:
        lat1, lon1, lat2, lon2 = config.poi_box
        a = gridmod.project_to_local(GeoCoordinate(lat1, lon1), origin)
        b = gridmod.project_to_local(GeoCoordinate(lat2, lon2), origin)
        return gridmod.BoundingBox(
            gridmod.PlanarPoint(min(a.x, b.x), min(a.y, b.y)),
            gridmod.PlanarPoint(max(a.x, b.x), max(a.y, b.y)),
        )
    points = []
    for r in records:
        points.append(gridmod.project_to_local(r.start_coord, origin))
        points.append(gridmod.project_to_local(r.end_coord, origin))
    return gridmod.compute_bounding_box(points, margin=config.margin)


def analyze_source(csv_text: str, config: PipelineConfig):
    """Parse, grid and window the input; returns everything a report needs."""
    records, parse_report = parse_actions(csv_text)
    clean, clean_report = validate_and_clean(records)
    rejections = parse_report.rejected + clean_report.rejected
    for line, reason in rejections:
        logger.warning("rejected row at line %d: %s", line, reason)
    if not clean:
        raise PipelineError("no valid action records in input")

    origin = _projection_origin(clean, config)
    bbox = _bounding_box(clean, origin, config)
    full_grid = gridmod.generate_grid(bbox, config.resolution, origin)
    pruned, annotated = gridmod.prune_and_annotate(clean, full_grid)

    duration = config.duration_min
    if duration is None:
        duration = math.ceil(max(r.end_time for r in clean) / 60.0)
    windows = generate_windows(duration, config.window_width, config.window_step)
    series = build_series(annotated, windows, config.speed_weighting)
    return clean, rejections, pruned, series


def _empty_partition(window) -> Partition:
    return Partition(window=window, assignment={}, modularity=0.0)


def analyze_window(g, config: PipelineConfig):
    """(stats, centrality, partition, speed summaries) of one window graph.

    Centrality is computed raw; reports carry both raw and normalized
    scores, so the normalization flag only records the caller's intent.
    """
    stats = graph_stats(g)
    centrality = betweenness(g, config.betweenness_mode, normalize=False)
    if g.nodes:
        partition = louvain(g, config.louvain_seed)
        speeds = community_speed_summary(g, partition)
    else:
        partition = _empty_partition(g.window)
        speeds = []
    return stats, centrality, partition, speeds


def run(config: PipelineConfig) -> RunSummary:
    """Execute the full pipeline and write every artifact."""
    problems = config.problems()
    if problems:
        raise PipelineError("; ".join(problems))
    if config.input is None or config.output is None:
        raise PipelineError("input and output must be configured")
    csv_text = Path(config.input).read_text(encoding="utf-8")

    clean, rejections, pruned, series = analyze_source(csv_text, config)

    out = Path(config.output)
    reports_dir = out / "reports"
    reports_dir.mkdir(parents=True, exist_ok=True)

    (out / "rejections.json").write_text(
        json.dumps([{"line": l, "reason": r} for l, r in rejections], indent=1) + "\n"
    )
    with open(out / "grid.csv", "w") as fh:
        gridmod.grid_to_csv(pruned, fh)
    if config.write_graphs:
        (out / "graphs.json").write_text(series_to_json(series) + "\n")
    (out / "run_params.json").write_text(
        json.dumps(config.analysis_params(), sort_keys=True, indent=1) + "\n"
    )

    stats_list = []
    render_dir = out / "render"
    if config.render:
        render_dir.mkdir(exist_ok=True)
    for k, g in enumerate(series):
        stats, centrality, partition, speeds = analyze_window(g, config)
        stats_list.append(stats)
        report = window_report(g, stats, centrality, partition, speeds)
        (reports_dir / f"window_{k:03d}.json").write_text(report_to_json(report))
        if config.render:
            tag = f"[{g.window.start:g}, {g.window.end:g}) min"
            svg = rendermod.render_heatmap(
                pruned, centrality.scores, title=f"betweenness {tag}"
            )
            (render_dir / f"betweenness_{k:03d}.svg").write_text(svg)
            svg = rendermod.render_heatmap(
                pruned, partition, title=f"communities {tag}"
            )
            (render_dir / f"communities_{k:03d}.svg").write_text(svg)

    with open(out / "stats.csv", "w") as fh:
        write_stats_csv(stats_list, fh)

    logger.info(
        "run complete: %d records, %d cells, %d windows -> %s",
        len(clean), len(pruned), len(series), out,
    )
    return RunSummary(
        records_read=len(clean) + len(rejections),
        records_used=len(clean),
        rejected=len(rejections),
        grid_cells=len(pruned),
        windows=len(series),
        output=out,
    )


def stats_only(config: PipelineConfig) -> list:
    """Fast path: grid + windows + descriptive stats, nothing else."""
    problems = config.problems()
    if problems:
        raise PipelineError("; ".join(problems))
    if config.input is None:
        raise PipelineError("input must be configured")
    csv_text = Path(config.input).read_text(encoding="utf-8")
    _, _, _, series = analyze_source(csv_text, config)
    return [graph_stats(g) for g in series]
