"""Command-line interface.

Subcommands:
    run       full pipeline: CSV in, reports/CSV/SVG artifacts out
    generate  synthetic match CSV + ground-truth JSON
    stats     fast path: per-window descriptive stats only
    render    re-render SVG heatmaps from a previous run's artifacts

Log verbosity is controlled by the PITCHGRAPH_LOG environment variable
(debug, info, warning, error; default warning).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import render as rendermod
from . import synthetic
from .analytics.communities import Partition
from .config import PipelineConfig, load_config_file, merge_overrides
from .grid import Cell, GeoCoordinate, Grid, PlanarPoint, grid_from_csv
from .ingest import HeaderError, write_actions_csv
from .pipeline import PipelineError, run, stats_only
from .reports import write_stats_csv
from .snapshots import TimeWindow

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_INPUT = 2


def _setup_logging() -> None:
    level = os.environ.get("PITCHGRAPH_LOG", "warning").upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format="%(levelname)s %(name)s: %(message)s",
    )


def _add_pipeline_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", "-i", type=Path, help="action CSV file")
    p.add_argument("--config", type=Path, help="key=value config file")
    p.add_argument("--resolution", type=float, help="cell side length in meters")
    p.add_argument("--window-width", type=float, help="window width in minutes")
    p.add_argument("--window-step", type=float, help="window step in minutes")
    p.add_argument("--duration", type=float, dest="duration_min",
                   help="match duration in minutes (default: inferred)")
    p.add_argument("--betweenness-mode", choices=("weighted", "unweighted"))
    p.add_argument("--normalize-betweenness", dest="betweenness_normalized",
                   action=argparse.BooleanOptionalAction, default=None)
    p.add_argument("--louvain-seed", type=int)
    p.add_argument("--margin", type=float, help="bounding-box margin in meters")
    p.add_argument("--poi-box", help="fixed area of interest: lat1,lon1,lat2,lon2")
    p.add_argument("--speed-weighting", choices=("uniform", "duration"),
                   help="edge speed aggregation (mean or duration-weighted)")


def _build_config(args: argparse.Namespace, need_output: bool) -> PipelineConfig:
    config = load_config_file(args.config) if args.config else PipelineConfig()
    overrides = {
        "input": args.input,
        "resolution": args.resolution,
        "window_width": args.window_width,
        "window_step": args.window_step,
        "duration_min": args.duration_min,
        "betweenness_mode": args.betweenness_mode,
        "betweenness_normalized": args.betweenness_normalized,
        "louvain_seed": args.louvain_seed,
        "margin": args.margin,
        "speed_weighting": args.speed_weighting,
    }
    if args.poi_box is not None:
        parts = [float(v) for v in args.poi_box.split(",")]
        if len(parts) != 4:
            raise PipelineError("--poi-box expects lat1,lon1,lat2,lon2")
        overrides["poi_box"] = tuple(parts)
    if need_output:
        overrides["output"] = args.output
        overrides["render"] = args.render
        overrides["write_graphs"] = args.write_graphs
    merge_overrides(config, overrides)
    return config


def _cmd_run(args: argparse.Namespace) -> int:
    config = _build_config(args, need_output=True)
    if config.input is None or not Path(config.input).is_file():
        print(f"error: cannot read input {config.input}", file=sys.stderr)
        return EXIT_INPUT
    summary = run(config)
    print(
        f"processed {summary.records_used}/{summary.records_read} records "
        f"({summary.rejected} rejected), {summary.grid_cells} cells, "
        f"{summary.windows} windows -> {summary.output}"
    )
    return EXIT_OK


def _cmd_stats(args: argparse.Namespace) -> int:
    config = _build_config(args, need_output=False)
    if config.input is None or not Path(config.input).is_file():
        print(f"error: cannot read input {config.input}", file=sys.stderr)
        return EXIT_INPUT
    stats_list = stats_only(config)
    if args.output is not None:
        with open(args.output, "w") as fh:
            write_stats_csv(stats_list, fh)
        print(f"wrote {len(stats_list)} rows -> {args.output}")
    else:
        write_stats_csv(stats_list, sys.stdout)
    return EXIT_OK


def _cmd_generate(args: argparse.Namespace) -> int:
    spec = synthetic.ScenarioSpec(
        scenario=args.scenario,
        players=args.players,
        duration_min=args.duration,
        seed=args.seed,
        action_rate=args.action_rate,
        pitch_length=args.pitch_length,
        pitch_width=args.pitch_width,
        crossing_rate=args.crossing_rate,
    )
    try:
        records = synthetic.generate(spec)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    with open(out / "actions.csv", "w") as fh:
        write_actions_csv(records, fh)
    (out / "ground_truth.json").write_text(
        json.dumps(synthetic.ground_truth(spec), sort_keys=True, indent=1) + "\n"
    )
    print(f"generated {len(records)} records -> {out}")
    return EXIT_OK


def _load_run_grid(run_dir: Path) -> Grid:
    rows = grid_from_csv((run_dir / "grid.csv").read_text())
    params = {}
    params_file = run_dir / "run_params.json"
    if params_file.is_file():
        params = json.loads(params_file.read_text())
    resolution = params.get("resolution") or _infer_resolution(rows)
    cells = tuple(
        Cell(r["cell_id"], PlanarPoint(r["x"], r["y"]), GeoCoordinate(r["lat"], r["lon"]))
        for r in rows
    )
    origin = GeoCoordinate(0.0, 0.0)  # placeholder; rendering uses planar coords only
    return Grid(cells, resolution, origin)


def _infer_resolution(rows: list[dict]) -> float:
    xs = sorted({r["x"] for r in rows})
    gaps = [b - a for a, b in zip(xs, xs[1:]) if b - a > 1e-9]
    return min(gaps) if gaps else 10.0


def _cmd_render(args: argparse.Namespace) -> int:
    run_dir = Path(args.run_dir)
    reports_dir = run_dir / "reports"
    if not (run_dir / "grid.csv").is_file() or not reports_dir.is_dir():
        print(f"error: {run_dir} does not look like a run output directory",
              file=sys.stderr)
        return EXIT_INPUT
    grid = _load_run_grid(run_dir)
    render_dir = run_dir / "render"
    render_dir.mkdir(exist_ok=True)
    count = 0
    for report_file in sorted(reports_dir.glob("window_*.json")):
        report = json.loads(report_file.read_text())
        index = report_file.stem.split("_")[1]
        w = report["window"]
        window = TimeWindow(w["start"], w["end"])
        tag = f"[{w['start']:g}, {w['end']:g}) min"
        if args.what in ("betweenness", "both"):
            key = "score_normalized" if args.normalized else "score"
            scores = {b["cell_id"]: b[key] for b in report["betweenness"]}
            svg = rendermod.render_heatmap(grid, scores, title=f"betweenness {tag}")
            (render_dir / f"betweenness_{index}.svg").write_text(svg)
            count += 1
        if args.what in ("communities", "both"):
            assignment = {
                a["cell_id"]: a["community"] for a in report["partition"]["assignment"]
            }
            partition = Partition(window=window, assignment=assignment,
                                  modularity=report["partition"]["modularity"])
            svg = rendermod.render_heatmap(grid, partition, title=f"communities {tag}")
            (render_dir / f"communities_{index}.svg").write_text(svg)
            count += 1
    print(f"rendered {count} SVG files -> {render_dir}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pitchgraph",
        description="Rolling-window spatial activity graphs for GPS sports data",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="full pipeline on an action CSV")
    _add_pipeline_flags(p_run)
    p_run.add_argument("--output", "-o", type=Path, help="output directory")
    p_run.add_argument("--render", action=argparse.BooleanOptionalAction,
                       default=None, help="write SVG heatmaps per window")
    p_run.add_argument("--write-graphs", dest="write_graphs",
                       action=argparse.BooleanOptionalAction, default=None)
    p_run.set_defaults(func=_cmd_run)

    p_stats = sub.add_parser("stats", help="descriptive stats only")
    _add_pipeline_flags(p_stats)
    p_stats.add_argument("--output", "-o", type=Path,
                         help="stats CSV path (default: stdout)")
    p_stats.set_defaults(func=_cmd_stats)

    p_gen = sub.add_parser("generate", help="synthetic match generator")
    p_gen.add_argument("--scenario", default="uniform",
                       choices=synthetic.SCENARIOS)
    p_gen.add_argument("--players", type=int, default=15)
    p_gen.add_argument("--duration", type=float, default=78.0,
                       help="match duration in minutes")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--action-rate", type=float, default=11.6,
                       help="mean actions per player per minute")
    p_gen.add_argument("--pitch-length", type=float, default=140.0)
    p_gen.add_argument("--pitch-width", type=float, default=85.0)
    p_gen.add_argument("--crossing-rate", type=float, default=None,
                       help="per-action probability of a half change")
    p_gen.add_argument("--out", type=Path, required=True, help="output directory")
    p_gen.set_defaults(func=_cmd_generate)

    p_render = sub.add_parser("render", help="re-render SVGs from saved reports")
    p_render.add_argument("--run-dir", type=Path, required=True,
                          help="output directory of a previous run")
    p_render.add_argument("--what", choices=("betweenness", "communities", "both"),
                          default="both")
    p_render.add_argument("--normalized", action="store_true",
                          help="render normalized betweenness scores")
    p_render.set_defaults(func=_cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    _setup_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (PipelineError, HeaderError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
