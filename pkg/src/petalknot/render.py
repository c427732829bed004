"""Static SVG drawings of petal projections and grid diagrams.

Petal style follows the rose ``r = cos(N theta)``: its k-th pass through
the origin is strand k of the permutation, so the picture agrees with
:func:`petal_projection_pd`. Every loop is one ``<path class="petal">``.
The top strand (height 1) runs through the center unbroken, strand of
height h stops ``(h - 1) * gap`` short of it on both sides.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from xml.sax.saxutils import escape

from .core import DiagramError, GridDiagram, PetalGridDiagram, PetalPermutation

MAX_RENDER_PETALS = 99


@dataclass(frozen=True)
class RenderSpec:
    target: PetalPermutation | GridDiagram | PetalGridDiagram
    style: str = "petal-star"  # or "grid"
    size: int = 480
    stroke: float = 2.0
    gap: float = 0.0  # 0 picks a default from the petal count
    title: str = ""


def _f(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _header(size: int, title: str) -> list[str]:
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
    ]
    if title:
        out.append(f"<title>{escape(title)}</title>")
    out.append(f'<rect width="{size}" height="{size}" fill="white"/>')
    return out


def _petal_svg(p: PetalPermutation, spec: RenderSpec) -> str:
    n2 = p.petals
    if n2 > MAX_RENDER_PETALS:
        raise DiagramError(f"refusing to render {n2} petals (limit {MAX_RENDER_PETALS})")
    size = spec.size
    c = size / 2
    radius = 0.45 * size
    gap = spec.gap or min(0.25 / n2, 0.02)  # in units of the rose radius
    heights = p.heights

    def point(theta: float) -> tuple[float, float]:
        r = math.cos(n2 * theta)
        return c + radius * r * math.cos(theta), c - radius * r * math.sin(theta)

    def cut(k: int) -> float:
        # angle offset from the k-th zero at which the strand is clipped
        g = (heights[k % n2] - 1) * gap
        return math.asin(min(g, 1.0)) / n2 if g else 0.0

    zeros = [math.pi / (2 * n2) + k * math.pi / n2 for k in range(n2 + 1)]
    steps = max(24, 720 // n2)
    out = _header(size, spec.title or f"petal projection {p}")
    out.append(f'<g fill="none" stroke="black" stroke-width="{_f(spec.stroke)}" stroke-linecap="round">')
    for k in range(n2):
        a = zeros[k] + cut(k)
        b = zeros[k + 1] - cut(k + 1)
        pts = [point(a + (b - a) * i / steps) for i in range(steps + 1)]
        d = "M " + " L ".join(f"{_f(x)} {_f(y)}" for x, y in pts)
        out.append(
            f'<path class="petal" data-loop="{k}" data-from-height="{heights[k]}" '
            f'data-to-height="{heights[(k + 1) % n2]}" d="{d}"/>'
        )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _grid_svg(g: GridDiagram, spec: RenderSpec) -> str:
    n = g.size
    size = spec.size
    cell = size / (n + 1)

    def xy(col: int, row: int) -> tuple[float, float]:
        # col is 1-based, row 0-based
        return col * cell, (row + 1) * cell

    rx, ro = g.row_of_x(), g.row_of_o()
    out = _header(size, spec.title or f"grid diagram of size {n}")
    sw = _f(spec.stroke)
    halo = _f(spec.stroke * 4)
    out.append('<g stroke="black" stroke-linecap="round">')
    for row in range(n):
        (x1, y1), (x2, y2) = xy(g.o[row], row), xy(g.x[row], row)
        out.append(f'<line class="horizontal" data-row="{row}" x1="{_f(x1)}" y1="{_f(y1)}" '
                   f'x2="{_f(x2)}" y2="{_f(y2)}" stroke-width="{sw}"/>')
    for col in range(1, n + 1):
        (x1, y1), (x2, y2) = xy(col, rx[col - 1]), xy(col, ro[col - 1])
        # verticals pass over: a white halo hides the horizontal underneath
        out.append(f'<line class="halo" x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2)}" y2="{_f(y2)}" '
                   f'stroke="white" stroke-width="{halo}"/>')
        out.append(f'<line class="vertical" data-col="{col}" x1="{_f(x1)}" y1="{_f(y1)}" '
                   f'x2="{_f(x2)}" y2="{_f(y2)}" stroke-width="{sw}"/>')
    out.append("</g>")
    fs = _f(cell * 0.5)
    out.append(f'<g font-family="monospace" font-size="{fs}" text-anchor="middle" '
               f'dominant-baseline="central">')
    for row in range(n):
        for mark, col in (("X", g.x[row]), ("O", g.o[row])):
            x, y = xy(col, row)
            out.append(f'<text class="marker" x="{_f(x)}" y="{_f(y)}">{mark}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_svg(spec: RenderSpec) -> str:
    t = spec.target
    if spec.style == "petal-star":
        if isinstance(t, PetalGridDiagram):
            from .core import petal_grid_to_petal_perm
            t = petal_grid_to_petal_perm(t)
        if not isinstance(t, PetalPermutation):
            raise DiagramError("petal-star style needs a petal permutation or petal grid")
        return _petal_svg(t, spec)
    if spec.style == "grid":
        if isinstance(t, PetalPermutation):
            from .core import petal_perm_to_petal_grid
            t = petal_perm_to_petal_grid(t)
        if isinstance(t, PetalGridDiagram):
            t = t.grid
        if t.size > MAX_RENDER_PETALS:
            raise DiagramError(f"refusing to render a grid of size {t.size} (limit {MAX_RENDER_PETALS})")
        return _grid_svg(t, spec)
    raise ValueError(f"unknown style {spec.style!r}")
