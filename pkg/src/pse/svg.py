"""SVG 1.1 rendering of drawings.

Coordinates are divided by the refinement factor, so a vertex at refined
(lam*x, lam*y) lands where the unrefined point (x, y) would. The y-axis is
flipped: larger y is drawn higher up.
"""
from __future__ import annotations

import colorsys
from typing import List

from .model import Drawing

_GOLDEN = 0.618033988749895


def edge_color(i: int) -> str:
    r, g, b = colorsys.hls_to_rgb((i * _GOLDEN) % 1.0, 0.42, 0.75)
    return "#{:02x}{:02x}{:02x}".format(round(r * 255), round(g * 255), round(b * 255))


def _fmt(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def render_svg(d: Drawing, scale: float = 20.0, margin: float = 1.0) -> str:
    lam = d.lam
    polylines = [[(float(x) / lam, float(y) / lam) for x, y in d.polyline(i)] for i in range(len(d.edges))]
    pts = [(float(x), float(y)) for x, y in d.points]
    every = pts + [p for pl in polylines for p in pl]
    if every:
        xmin = min(p[0] for p in every)
        xmax = max(p[0] for p in every)
        ymin = min(p[1] for p in every)
        ymax = max(p[1] for p in every)
    else:
        xmin = xmax = ymin = ymax = 0.0
    width = (xmax - xmin + 2 * margin) * scale
    height = (ymax - ymin + 2 * margin) * scale

    def X(x: float) -> str:
        return _fmt((x - xmin + margin) * scale)

    def Y(y: float) -> str:
        return _fmt((ymax - y + margin) * scale)

    stroke = max(scale / 12, 0.5)
    out: List[str] = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        '<g id="edges" fill="none" stroke-linejoin="round">',
    ]
    for i, pl in enumerate(polylines):
        e = d.edges[i]
        path = " ".join(("M" if j == 0 else "L") + f"{X(x)} {Y(y)}" for j, (x, y) in enumerate(pl))
        out.append(
            f'<path id="e{i}" class="edge" data-u="{e.u}" data-v="{e.v}" d="{path}" '
            f'stroke="{edge_color(i)}" stroke-width="{_fmt(stroke)}"/>'
        )
    out.append("</g>")
    out.append('<g id="points" fill="#000000">')
    for i, (x, y) in enumerate(pts):
        out.append(f'<circle id="p{i}" class="point" cx="{X(x)}" cy="{Y(y)}" r="{_fmt(scale / 6)}"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
