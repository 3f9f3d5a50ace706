import io
import math

import numpy as np
import pytest

from pitchgraph.grid import (
    BoundingBox,
    PlanarPoint,
    assign_cell,
    assign_cells,
    compute_bounding_box,
    generate_grid,
    grid_from_csv,
    grid_to_csv,
    planar_to_geo,
    project_to_local,
    prune_and_annotate,
)
from pitchgraph.ingest import ActionRecord, GeoCoordinate

from oracles import brute_nearest_centroid

ORIGIN = GeoCoordinate(54.0, -7.0)


def test_projection_identity_at_origin():
    p = project_to_local(ORIGIN, ORIGIN)
    assert (p.x, p.y) == (0.0, 0.0)


def test_projection_latitude_offset():
    # 0.0009 deg north: y = R * 0.0009 * pi/180 = 100.0754...
    p = project_to_local(GeoCoordinate(54.0009, -7.0), ORIGIN)
    assert p.x == 0.0
    assert p.y == pytest.approx(100.0754, abs=1e-3)


def test_projection_longitude_offset():
    # 0.00154 deg east scaled by cos(54 deg): x = 100.655...
    p = project_to_local(GeoCoordinate(54.0, -6.99846), ORIGIN)
    assert p.y == 0.0
    assert p.x == pytest.approx(100.655, abs=1e-2)


def test_projection_round_trip():
    rng = np.random.default_rng(8)
    for _ in range(200):
        coord = GeoCoordinate(
            54.0 + rng.uniform(-0.002, 0.002), -7.0 + rng.uniform(-0.003, 0.003)
        )
        back = planar_to_geo(project_to_local(coord, ORIGIN), ORIGIN)
        assert back.lat == pytest.approx(coord.lat, abs=1e-9)
        assert back.lon == pytest.approx(coord.lon, abs=1e-9)


@pytest.mark.parametrize(
    "points,margin,expect",
    [
        ([(0, 0), (10, 5)], 0.0, ((0, 0), (10, 5))),
        ([(0, 0)], 2.0, ((-2, -2), (2, 2))),
        ([(0, 0), (100, 60)], 5.0, ((-5, -5), (105, 65))),
    ],
)
def test_bounding_box(points, margin, expect):
    box = compute_bounding_box([PlanarPoint(*p) for p in points], margin)
    assert (box.min_corner.x, box.min_corner.y) == expect[0]
    assert (box.max_corner.x, box.max_corner.y) == expect[1]


def test_bounding_box_empty():
    with pytest.raises(ValueError, match="no coordinates"):
        compute_bounding_box([], 1.0)


def test_grid_generation_layout():
    grid = generate_grid(BoundingBox(PlanarPoint(0, 0), PlanarPoint(100, 60)), 10.0, ORIGIN)
    assert len(grid) == 60
    assert grid.cells[0].cell_id == 0
    assert (grid.cells[0].centroid_planar.x, grid.cells[0].centroid_planar.y) == (5.0, 5.0)
    assert (grid.cells[-1].centroid_planar.x, grid.cells[-1].centroid_planar.y) == (95.0, 55.0)
    assert grid.cells[-1].cell_id == 59
    # ids are row-major: cell 10 starts the second row
    assert (grid.cells[10].centroid_planar.x, grid.cells[10].centroid_planar.y) == (5.0, 15.0)


def test_grid_single_cell():
    grid = generate_grid(BoundingBox(PlanarPoint(0, 0), PlanarPoint(10, 10)), 10.0, ORIGIN)
    assert len(grid) == 1
    assert (grid.cells[0].centroid_planar.x, grid.cells[0].centroid_planar.y) == (5.0, 5.0)


def test_grid_ceiling_arithmetic():
    grid = generate_grid(BoundingBox(PlanarPoint(0, 0), PlanarPoint(95, 60)), 10.0, ORIGIN)
    assert len(grid) == math.ceil(9.5) * math.ceil(6.0) == 60


def test_grid_cell_count_formula():
    rng = np.random.default_rng(3)
    for _ in range(20):
        w, h = rng.uniform(5, 150, size=2)
        res = rng.uniform(2, 25)
        grid = generate_grid(BoundingBox(PlanarPoint(0, 0), PlanarPoint(w, h)), res, ORIGIN)
        assert len(grid) == math.ceil(w / res) * math.ceil(h / res)


def test_grid_centroid_geo_round_trip():
    grid = generate_grid(BoundingBox(PlanarPoint(0, 0), PlanarPoint(50, 40)), 10.0, ORIGIN)
    for cell in grid.cells:
        p = project_to_local(cell.centroid_geo, ORIGIN)
        assert p.x == pytest.approx(cell.centroid_planar.x, abs=1e-6)
        assert p.y == pytest.approx(cell.centroid_planar.y, abs=1e-6)


def test_grid_invalid_inputs():
    box = BoundingBox(PlanarPoint(0, 0), PlanarPoint(10, 10))
    with pytest.raises(ValueError):
        generate_grid(box, 0.0, ORIGIN)
    with pytest.raises(ValueError):
        generate_grid(BoundingBox(PlanarPoint(0, 0), PlanarPoint(0, 10)), 5.0, ORIGIN)


def test_assign_on_centroid_and_tie_break():
    grid = generate_grid(BoundingBox(PlanarPoint(0, 0), PlanarPoint(40, 20)), 10.0, ORIGIN)
    c7 = grid.cells[7]
    assert assign_cell(c7.centroid_planar, grid) == 7
    # midpoint between cells 3 and 4 (vertically adjacent rows 0/1, col 3)
    mid = PlanarPoint(35.0, 10.0)
    d3 = math.dist((mid.x, mid.y), (35.0, 5.0))
    d4 = math.dist((mid.x, mid.y), (35.0, 15.0))
    assert d3 == d4
    assert assign_cell(mid, grid) == 3


def test_assign_matches_brute_force_scan():
    grid = generate_grid(BoundingBox(PlanarPoint(0, 0), PlanarPoint(100, 60)), 10.0, ORIGIN)
    centroids = [(c.centroid_planar.x, c.centroid_planar.y) for c in grid.cells]
    rng = np.random.default_rng(17)
    pts = rng.uniform((-5, -5), (105, 65), size=(100, 2))
    got = assign_cells(pts, grid)
    for k in range(len(pts)):
        expected = brute_nearest_centroid(tuple(pts[k]), centroids)
        assert got[k] == grid.cells[expected].cell_id
        # nearest-centroid property: no other centroid is closer
        dx = math.dist(tuple(pts[k]), centroids[got[k]])
        assert all(math.dist(tuple(pts[k]), c) >= dx - 1e-12 for c in centroids)


def _action(start_xy, end_xy):
    return ActionRecord(
        player_id=1,
        start_time=0.0,
        end_time=1.0,
        start_coord=planar_to_geo(PlanarPoint(*start_xy), ORIGIN),
        end_coord=planar_to_geo(PlanarPoint(*end_xy), ORIGIN),
        avg_speed=1.0,
        action_label="Running",
        duration=1.0,
    )


def test_prune_keeps_only_visited_cells():
    grid = generate_grid(BoundingBox(PlanarPoint(0, 0), PlanarPoint(100, 60)), 10.0, ORIGIN)
    records = [_action((5, 5), (95, 55)), _action((15, 5), (15, 5))]
    pruned, annotated = prune_and_annotate(records, grid)
    referenced = set()
    for a in annotated:
        referenced.add(a.start_cell)
        referenced.add(a.end_cell)
    assert set(c.cell_id for c in pruned.cells) == referenced
    assert set(c.cell_id for c in pruned.cells) <= set(c.cell_id for c in grid.cells)
    # ids preserved, not renumbered
    assert annotated[0].start_cell == 0
    assert annotated[0].end_cell == 59
    assert annotated[1].start_cell == annotated[1].end_cell == 1


def test_prune_single_cell_degenerate():
    grid = generate_grid(BoundingBox(PlanarPoint(0, 0), PlanarPoint(100, 60)), 10.0, ORIGIN)
    records = [_action((5, 5), (6, 6)), _action((4, 4), (5, 5))]
    pruned, annotated = prune_and_annotate(records, grid)
    assert len(pruned) == 1
    assert all(a.start_cell == a.end_cell == 0 for a in annotated)


def test_prune_empty_records():
    grid = generate_grid(BoundingBox(PlanarPoint(0, 0), PlanarPoint(100, 60)), 10.0, ORIGIN)
    pruned, annotated = prune_and_annotate([], grid)
    assert len(pruned) == 0 and annotated == []


def test_grid_csv_round_trip():
    grid = generate_grid(BoundingBox(PlanarPoint(0, 0), PlanarPoint(30, 20)), 10.0, ORIGIN)
    buf = io.StringIO()
    grid_to_csv(grid, buf)
    rows = grid_from_csv(buf.getvalue())
    assert [r["cell_id"] for r in rows] == [c.cell_id for c in grid.cells]
    for row, cell in zip(rows, grid.cells):
        assert row["x"] == cell.centroid_planar.x
        assert row["lat"] == cell.centroid_geo.lat
