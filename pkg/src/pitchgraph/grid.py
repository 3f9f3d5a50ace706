"""Local planar projection and square-grid tessellation of the playing area.

Coordinates are projected onto a local tangent plane with an
equirectangular approximation: over a pitch-sized extent (≲200 m) its
distortion is orders of magnitude below consumer GPS error. The grid is a
uniform square lattice of centroids covering a bounding box; every visited
coordinate is mapped to its nearest centroid and centroids that never
receive a visit are pruned from the analysis.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

import numpy as np

from .ingest import ActionRecord, GeoCoordinate

EARTH_RADIUS_M = 6_371_000.0
_DEG = math.pi / 180.0


@dataclass(frozen=True)
class PlanarPoint:
    """Meters east (x) and north (y) of the projection origin."""

    x: float
    y: float


@dataclass(frozen=True)
class BoundingBox:
    min_corner: PlanarPoint
    max_corner: PlanarPoint

    @property
    def width(self) -> float:
        return self.max_corner.x - self.min_corner.x

    @property
    def height(self) -> float:
        return self.max_corner.y - self.min_corner.y


@dataclass(frozen=True)
class Cell:
    """One square of the tessellation, represented by its centroid."""

    cell_id: int
    centroid_planar: PlanarPoint
    centroid_geo: GeoCoordinate


@dataclass(frozen=True)
class Grid:
    """A set of square cells with row-major ids over a regular lattice."""

    cells: tuple[Cell, ...]
    resolution: float
    origin: GeoCoordinate

    def __len__(self) -> int:
        return len(self.cells)

    def cell_ids(self) -> list[int]:
        return [c.cell_id for c in self.cells]

    def centroid_array(self) -> np.ndarray:
        """(n, 2) array of planar centroids, in cell order."""
        return np.array(
            [(c.centroid_planar.x, c.centroid_planar.y) for c in self.cells],
            dtype=np.float64,
        ).reshape(len(self.cells), 2)


@dataclass(frozen=True)
class CellAnnotatedAction:
    """An action tagged with the grid cells of its start and end points."""

    action: ActionRecord
    start_cell: int
    end_cell: int


def project_to_local(coord: GeoCoordinate, origin: GeoCoordinate) -> PlanarPoint:
    """Equirectangular projection of ``coord`` around ``origin``.

    x = R * (lon - lon0) * pi/180 * cos(lat0 * pi/180)
    y = R * (lat - lat0) * pi/180
    """
    x = EARTH_RADIUS_M * (coord.lon - origin.lon) * _DEG * math.cos(origin.lat * _DEG)
    y = EARTH_RADIUS_M * (coord.lat - origin.lat) * _DEG
    return PlanarPoint(x, y)


def planar_to_geo(point: PlanarPoint, origin: GeoCoordinate) -> GeoCoordinate:
    """Inverse of :func:`project_to_local` around the same origin."""
    lat = origin.lat + point.y / (EARTH_RADIUS_M * _DEG)
    lon = origin.lon + point.x / (EARTH_RADIUS_M * _DEG * math.cos(origin.lat * _DEG))
    return GeoCoordinate(lat, lon)


def geo_centroid(coords: Iterable[GeoCoordinate]) -> GeoCoordinate:
    coords = list(coords)
    if not coords:
        raise ValueError("no coordinates")
    return GeoCoordinate(
        sum(c.lat for c in coords) / len(coords),
        sum(c.lon for c in coords) / len(coords),
    )


def compute_bounding_box(points: Sequence[PlanarPoint], margin: float = 0.0) -> BoundingBox:
    """Smallest axis-aligned box containing ``points``, grown by ``margin``."""
    if not points:
        raise ValueError("no coordinates")
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    return BoundingBox(
        PlanarPoint(min(xs) - margin, min(ys) - margin),
        PlanarPoint(max(xs) + margin, max(ys) + margin),
    )


def generate_grid(bbox: BoundingBox, resolution: float, origin: GeoCoordinate) -> Grid:
    """Tessellate ``bbox`` into square cells of side ``resolution``.

    Centroids sit at ``(min.x + (i+0.5)*res, min.y + (j+0.5)*res)``; cell
    ids are assigned row-major (x varies fastest). The lattice covers the
    box completely, so the last row/column may overhang.
    """
    if resolution <= 0:
        raise ValueError("resolution must be positive")
    if bbox.width <= 0 or bbox.height <= 0:
        raise ValueError("degenerate bounding box")
    ncols = math.ceil(bbox.width / resolution)
    nrows = math.ceil(bbox.height / resolution)
    cells = []
    for j in range(nrows):
        y = bbox.min_corner.y + (j + 0.5) * resolution
        for i in range(ncols):
            x = bbox.min_corner.x + (i + 0.5) * resolution
            planar = PlanarPoint(x, y)
            cells.append(Cell(j * ncols + i, planar, planar_to_geo(planar, origin)))
    return Grid(tuple(cells), resolution, origin)


def assign_cell(point: PlanarPoint, grid: Grid) -> int:
    """Id of the grid cell whose centroid is nearest to ``point``.

    Ties are broken by the lowest cell_id so outputs are reproducible.
    """
    if not grid.cells:
        raise ValueError("empty grid")
    return int(assign_cells(np.array([[point.x, point.y]]), grid)[0])


def assign_cells(points: np.ndarray, grid: Grid) -> np.ndarray:
    """Vectorized nearest-centroid assignment for an (n, 2) point array.

    np.argmin returns the first minimum, which is the lowest cell_id since
    cells are stored in id order.
    """
    if not grid.cells:
        raise ValueError("empty grid")
    centroids = grid.centroid_array()
    d2 = (
        (points[:, 0:1] - centroids[None, :, 0]) ** 2
        + (points[:, 1:2] - centroids[None, :, 1]) ** 2
    )
    ids = np.array(grid.cell_ids(), dtype=np.int64)
    return ids[np.argmin(d2, axis=1)]


def prune_and_annotate(
    records: Sequence[ActionRecord], grid: Grid
) -> tuple[Grid, list[CellAnnotatedAction]]:
    """Tag every action with its start/end cells and drop unvisited cells.

    The returned grid contains exactly the cells referenced by at least
    one annotation; cell ids are preserved, not renumbered.
    """
    if not records:
        return Grid((), grid.resolution, grid.origin), []
    points = np.empty((2 * len(records), 2), dtype=np.float64)
    for k, r in enumerate(records):
        start = project_to_local(r.start_coord, grid.origin)
        end = project_to_local(r.end_coord, grid.origin)
        points[2 * k] = (start.x, start.y)
        points[2 * k + 1] = (end.x, end.y)
    assigned = assign_cells(points, grid)
    annotated = [
        CellAnnotatedAction(r, int(assigned[2 * k]), int(assigned[2 * k + 1]))
        for k, r in enumerate(records)
    ]
    visited = set(int(c) for c in assigned)
    kept = tuple(c for c in grid.cells if c.cell_id in visited)
    return Grid(kept, grid.resolution, grid.origin), annotated


def grid_to_csv(grid: Grid, sink: TextIO) -> None:
    """Export the grid as `cell_id,centroid_lat,centroid_lon,centroid_x,centroid_y`."""
    sink.write("cell_id,centroid_lat,centroid_lon,centroid_x,centroid_y\n")
    for c in grid.cells:
        sink.write(
            f"{c.cell_id},{c.centroid_geo.lat!r},{c.centroid_geo.lon!r},"
            f"{c.centroid_planar.x!r},{c.centroid_planar.y!r}\n"
        )


def grid_from_csv(source: TextIO | str) -> list[dict]:
    """Read back rows written by :func:`grid_to_csv` (used by re-rendering)."""
    if isinstance(source, str):
        source = io.StringIO(source)
    rows = []
    header = source.readline().strip().split(",")
    expected = ["cell_id", "centroid_lat", "centroid_lon", "centroid_x", "centroid_y"]
    if header != expected:
        raise ValueError(f"unexpected grid CSV header: {header}")
    for line in source:
        if not line.strip():
            continue
        cid, lat, lon, x, y = line.strip().split(",")
        rows.append(
            {"cell_id": int(cid), "lat": float(lat), "lon": float(lon),
             "x": float(x), "y": float(y)}
        )
    return rows
