"""Self-contained SVG heatmaps of per-cell values over the pitch grid.

Two flavours share one renderer: a continuous color ramp for scalar
scores (betweenness) and a categorical palette for community maps. Cells
of the pruned grid that are inactive in the rendered window are drawn
black, matching the "not covered" convention of the reports.
"""

from __future__ import annotations

from typing import Mapping

from .analytics.communities import Partition
from .grid import Grid

# anchor points of the continuous ramp (dark blue -> teal -> yellow)
_RAMP = (
    (0.0, (68, 1, 84)),
    (0.25, (59, 82, 139)),
    (0.5, (33, 145, 140)),
    (0.75, (94, 201, 98)),
    (1.0, (253, 231, 37)),
)

CATEGORICAL_PALETTE = (
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#e6ab02",
    "#a65628", "#f781bf", "#1b9e77", "#66a61e", "#7570b3", "#d95f02",
)

INACTIVE_COLOR = "#000000"


def ramp_color(t: float) -> str:
    """Hex color at position t in [0, 1] of the continuous ramp."""
    t = min(1.0, max(0.0, t))
    for (t0, c0), (t1, c1) in zip(_RAMP, _RAMP[1:]):
        if t <= t1:
            f = 0.0 if t1 == t0 else (t - t0) / (t1 - t0)
            r, g, b = (round(a + f * (b_ - a)) for a, b_ in zip(c0, c1))
            return f"#{r:02x}{g:02x}{b:02x}"
    return "#%02x%02x%02x" % _RAMP[-1][1]


def community_color(community_id: int) -> str:
    return CATEGORICAL_PALETTE[community_id % len(CATEGORICAL_PALETTE)]


def _empty_svg(notice: str) -> str:
    return (
        '<svg xmlns="http://www.w3.org/2000/svg" width="400" height="60" '
        'viewBox="0 0 400 60">\n'
        f'<text x="10" y="35" font-family="sans-serif" font-size="14">{notice}</text>\n'
        "</svg>\n"
    )


def render_heatmap(
    grid: Grid,
    values: Mapping[int, float] | Partition,
    title: str = "",
) -> str:
    """SVG document with one square per grid cell.

    ``values`` is either a cell_id -> score mapping (continuous ramp) or a
    :class:`Partition` (categorical colors). Grid cells absent from the
    mapping are painted black.
    """
    if isinstance(values, Partition):
        return _render(grid, values.assignment, title, categorical=True)
    return _render(grid, dict(values), title, categorical=False)


def _render(grid: Grid, values: dict[int, float], title: str, categorical: bool) -> str:
    if not grid.cells:
        return _empty_svg("empty grid: nothing to render")
    res = grid.resolution
    xs = [c.centroid_planar.x for c in grid.cells]
    ys = [c.centroid_planar.y for c in grid.cells]
    x0, x1 = min(xs) - res / 2, max(xs) + res / 2
    y0, y1 = min(ys) - res / 2, max(ys) + res / 2
    scale = min(6.0, 760.0 / max(x1 - x0, 1e-9))
    pitch_w = (x1 - x0) * scale
    pitch_h = (y1 - y0) * scale
    legend_w = 170.0
    top = 28.0
    width = pitch_w + legend_w + 20
    height = max(pitch_h + top + 10, 160.0)

    if categorical:
        communities = sorted(set(values.values()))
        color_of = {c: community_color(c) for c in communities}
    else:
        finite = [v for v in values.values()]
        lo = min(finite) if finite else 0.0
        hi = max(finite) if finite else 1.0
        span = hi - lo

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" '
        f'height="{height:.0f}" viewBox="0 0 {width:.2f} {height:.2f}">',
        f'<text x="6" y="18" font-family="sans-serif" font-size="13">{title}</text>',
    ]
    if not categorical:
        parts.append(
            '<defs><linearGradient id="ramp" x1="0" y1="1" x2="0" y2="0">'
            + "".join(
                f'<stop offset="{t:.2f}" stop-color="{ramp_color(t)}"/>'
                for t in (0.0, 0.25, 0.5, 0.75, 1.0)
            )
            + "</linearGradient></defs>"
        )

    for cell in grid.cells:
        cx = (cell.centroid_planar.x - res / 2 - x0) * scale
        cy = (y1 - (cell.centroid_planar.y + res / 2)) * scale + top
        if cell.cell_id in values:
            if categorical:
                fill = color_of[values[cell.cell_id]]
                label = f"cell {cell.cell_id}: community {values[cell.cell_id]}"
            else:
                v = values[cell.cell_id]
                t = 1.0 if span == 0 else (v - lo) / span
                fill = ramp_color(t)
                label = f"cell {cell.cell_id}: {v:.6g}"
        else:
            fill = INACTIVE_COLOR
            label = f"cell {cell.cell_id}: inactive"
        parts.append(
            f'<rect class="cell" x="{cx:.2f}" y="{cy:.2f}" width="{res * scale:.2f}" '
            f'height="{res * scale:.2f}" fill="{fill}" stroke="#ffffff" '
            f'stroke-width="0.4"><title>{label}</title></rect>'
        )

    lx = pitch_w + 16
    parts.append(
        f'<text x="{lx:.2f}" y="{top + 12:.2f}" font-family="sans-serif" '
        f'font-size="11">legend</text>'
    )
    if categorical:
        y = top + 24
        for c in communities:
            parts.append(
                f'<rect class="legend" x="{lx:.2f}" y="{y:.2f}" width="14" height="14" '
                f'fill="{color_of[c]}"/>'
                f'<text x="{lx + 20:.2f}" y="{y + 11:.2f}" font-family="sans-serif" '
                f'font-size="11">community {c}</text>'
            )
            y += 18
        parts.append(
            f'<rect class="legend" x="{lx:.2f}" y="{y:.2f}" width="14" height="14" '
            f'fill="{INACTIVE_COLOR}"/>'
            f'<text x="{lx + 20:.2f}" y="{y + 11:.2f}" font-family="sans-serif" '
            f'font-size="11">inactive</text>'
        )
    else:
        bar_h = max(pitch_h - 40, 60)
        parts.append(
            f'<rect class="legend" x="{lx:.2f}" y="{top + 24:.2f}" width="16" '
            f'height="{bar_h:.2f}" fill="url(#ramp)"/>'
            f'<text x="{lx + 22:.2f}" y="{top + 32:.2f}" font-family="sans-serif" '
            f'font-size="11">{hi:.6g}</text>'
            f'<text x="{lx + 22:.2f}" y="{top + 24 + bar_h:.2f}" font-family="sans-serif" '
            f'font-size="11">{lo:.6g}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
