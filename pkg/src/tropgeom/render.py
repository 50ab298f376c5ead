"""SVG drawing of tropical plane curves.

Geometry is exact upstream; coordinates are only turned into decimals (six
significant digits) when written out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .planecurve import RegularSubdivision, TropicalPlaneCurve


@dataclass(frozen=True)
class RenderOptions:
    viewport: tuple | None = None  # (xmin, ymin, xmax, ymax); None = auto
    ray_clip_length: Fraction = Fraction(2)
    weight_labels: bool = True
    show_subdivision: bool = False
    scale: Fraction = Fraction(40)

    def __post_init__(self):
        if self.ray_clip_length <= 0 or self.scale <= 0:
            raise ValueError("ray_clip_length and scale must be positive")


def _num(x) -> str:
    s = f"{float(x):.6g}"
    return "0" if s == "-0" else s


def auto_viewport(curve: TropicalPlaneCurve, pad) -> tuple:
    if not curve.vertices:
        return (-pad, -pad, pad, pad)
    xs = [v[0] for v in curve.vertices]
    ys = [v[1] for v in curve.vertices]
    return (min(xs) - pad, min(ys) - pad, max(xs) + pad, max(ys) + pad)


def _ray_end(base, direction, length):
    norm = math.hypot(*direction)
    return (
        float(base[0]) + float(length) * direction[0] / norm,
        float(base[1]) + float(length) * direction[1] / norm,
    )


def render_svg(
    curve: TropicalPlaneCurve,
    subdivision: RegularSubdivision | None = None,
    opts: RenderOptions = RenderOptions(),
) -> str:
    xmin, ymin, xmax, ymax = opts.viewport or auto_viewport(curve, opts.ray_clip_length)
    s = float(opts.scale)
    width = (float(xmax) - float(xmin)) * s
    height = (float(ymax) - float(ymin)) * s

    def to_px(p):
        return ((float(p[0]) - float(xmin)) * s, (float(ymax) - float(p[1])) * s)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_num(width)}" height="{_num(height)}" '
        f'viewBox="0 0 {_num(width)} {_num(height)}">',
        '<g class="curve" stroke="black" stroke-width="1" fill="none">',
    ]
    labels = []
    segments = [
        (curve.vertices[e.endpoints[0]], curve.vertices[e.endpoints[1]], e.weight)
        for e in curve.edges
    ]
    segments += [
        (
            curve.vertices[r.base],
            _ray_end(curve.vertices[r.base], r.direction, opts.ray_clip_length),
            r.weight,
        )
        for r in curve.rays
    ]
    for a, b, weight in segments:
        (x1, y1), (x2, y2) = to_px(a), to_px(b)
        out.append(
            f'<line x1="{_num(x1)}" y1="{_num(y1)}" x2="{_num(x2)}" y2="{_num(y2)}"/>'
        )
        if opts.weight_labels and weight > 1:
            labels.append(
                f'<text x="{_num((x1 + x2) / 2)}" y="{_num((y1 + y2) / 2)}" '
                f'font-size="12">{weight}</text>'
            )
    out.append("</g>")
    if labels:
        out.append('<g class="weights" fill="black">')
        out.extend(labels)
        out.append("</g>")
    if opts.show_subdivision and subdivision is not None:
        out.extend(_inset(subdivision, width))
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _inset(sub: RegularSubdivision, width: float, size: float = 80.0, margin: float = 8.0):
    pts = [p for cell in sub.cells for p in cell.points]
    if not pts:
        return []
    lo_x = min(p[0] for p in pts)
    lo_y = min(p[1] for p in pts)
    span = max(max(p[0] for p in pts) - lo_x, max(p[1] for p in pts) - lo_y, 1)
    k = size / span
    ox = width - size - margin

    def px(p):
        return (ox + (p[0] - lo_x) * k, margin + size - (p[1] - lo_y) * k)

    out = ['<g class="subdivision" stroke="gray" stroke-width="1" fill="none">']
    drawn = set()
    for cell in sub.cells:
        for a, b in cell.edges():
            key = tuple(sorted((a, b)))
            if key in drawn:
                continue
            drawn.add(key)
            (x1, y1), (x2, y2) = px(a), px(b)
            out.append(
                f'<line x1="{_num(x1)}" y1="{_num(y1)}" x2="{_num(x2)}" y2="{_num(y2)}"/>'
            )
    out.append("</g>")
    return out
