"""SVG rendering of planar tropical polytopes (d = 3 only).

Draws in the affine chart (x2 - x1, x3 - x1) with the y-axis pointing
upward.  Exact rationals are converted to decimals only at the very edge,
when formatting coordinates into SVG attributes.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import List, Sequence, Tuple

from .points import PointConfiguration
from .polytope import BoundedComplex, PreconditionError, corners

DEFAULT_LAYERS = ("cells", "pseudo-vertices", "generators")
ALL_LAYERS = ("cells", "pseudo-vertices", "generators", "cornered-hull",
              "dual-lines")

# chart images of the directions -e1, -e2, -e3
_RAY_DIRS = ((1.0, 1.0), (-1.0, 0.0), (0.0, -1.0))


def emit_svg(
    V: PointConfiguration,
    complex_: BoundedComplex,
    layers: Sequence[str] = DEFAULT_LAYERS,
    size: int = 480,
) -> str:
    if V.d != 3:
        raise PreconditionError("SVG rendering needs d = 3")
    unknown = [l for l in layers if l not in ALL_LAYERS]
    if unknown:
        raise PreconditionError(f"unknown layers: {unknown}")

    gen_pts = [_chart(p) for p in V.points]
    pv_pts = [_chart(p) for p in complex_.pseudo_vertices]
    frame = gen_pts + pv_pts
    if "cornered-hull" in layers:
        frame += [_chart(c) for c in corners(V)]
    xs = [p[0] for p in frame]
    ys = [p[1] for p in frame]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1.0)
    margin = 0.05 * span + 0.5
    x0, x1 = min(xs) - margin, max(xs) + margin
    y0, y1 = min(ys) - margin, max(ys) + margin
    scale = size / max(x1 - x0, y1 - y0)

    def T(p: Tuple[float, float]) -> Tuple[float, float]:
        return ((p[0] - x0) * scale, (y1 - p[1]) * scale)  # flip y upward

    width = (x1 - x0) * scale
    height = (y1 - y0) * scale
    out: List[str] = [
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{width:.2f}" height="{height:.2f}" '
        f'viewBox="0 0 {width:.2f} {height:.2f}">'
    ]

    if "cornered-hull" in layers:
        hull = _ordered([_chart(c) for c in _polytrope_vertices(V)])
        out.append(_polygon(hull, T, "#f2e8c8", "#c0a85a", 1.0))
    if "cells" in layers:
        for cell in complex_.maximal_cells:
            pts = [pv_pts[i] for i in cell]
            if len(pts) >= 3:
                out.append(_polygon(_ordered(pts), T, "#cfe0f0", "#36648b", 1.2))
        for edge in complex_.faces.get(1, []):
            a, b = (pv_pts[i] for i in edge)
            (ax, ay), (bx, by) = T(a), T(b)
            out.append(
                f'<line x1="{ax:.2f}" y1="{ay:.2f}" x2="{bx:.2f}" y2="{by:.2f}" '
                f'stroke="#36648b" stroke-width="1.2"/>'
            )
    if "dual-lines" in layers:
        reach = 4 * max(x1 - x0, y1 - y0)
        for g in gen_pts:
            for dx, dy in _RAY_DIRS:
                norm = math.hypot(dx, dy)
                tip = (g[0] + dx / norm * reach, g[1] + dy / norm * reach)
                (ax, ay), (bx, by) = T(g), T(tip)
                out.append(
                    f'<line x1="{ax:.2f}" y1="{ay:.2f}" x2="{bx:.2f}" y2="{by:.2f}" '
                    f'stroke="#b05050" stroke-width="0.8" stroke-dasharray="4 3"/>'
                )
    if "pseudo-vertices" in layers:
        for p in pv_pts:
            cx, cy = T(p)
            out.append(
                f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="3.5" '
                f'fill="#ffffff" stroke="#36648b" stroke-width="1.3"/>'
            )
    if "generators" in layers:
        for g in gen_pts:
            cx, cy = T(g)
            out.append(
                f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="3.0" fill="#36648b"/>'
            )
    out.append("</svg>")
    return "\n".join(out)


def _chart(p) -> Tuple[float, float]:
    a, b = p.affine_chart()
    return float(a), float(b)


def _polytrope_vertices(V: PointConfiguration):
    from .polytope import cornered_hull

    _, verts = cornered_hull(V)
    return verts


def _ordered(pts: List[Tuple[float, float]]) -> List[Tuple[float, float]]:
    """Order the vertices of a convex polygon counterclockwise."""
    cx = sum(p[0] for p in pts) / len(pts)
    cy = sum(p[1] for p in pts) / len(pts)
    return sorted(pts, key=lambda p: math.atan2(p[1] - cy, p[0] - cx))


def _polygon(pts, T, fill: str, stroke: str, width: float) -> str:
    coords = " ".join(f"{x:.2f},{y:.2f}" for x, y in (T(p) for p in pts))
    return (
        f'<polygon points="{coords}" fill="{fill}" '
        f'stroke="{stroke}" stroke-width="{width}"/>'
    )
