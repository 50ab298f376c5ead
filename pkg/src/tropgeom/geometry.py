"""Exact planar predicates and small lattice helpers.

All inputs are ints or Fractions; nothing here touches floating point.
"""

from __future__ import annotations

import math
from fractions import Fraction


def cross(o, a, b):
    """Twice the signed area of triangle (o, a, b); > 0 for a left turn."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def sub(u, v):
    return tuple(x - y for x, y in zip(u, v))


def convex_hull(points):
    """Strictly convex hull, counterclockwise from the lexicographic minimum.

    Collinear boundary points are dropped. A collinear input returns its two
    extreme points and a single point returns itself.
    """
    pts = sorted(set(map(tuple, points)))
    if len(pts) <= 2:
        return pts

    def half(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and cross(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = half(pts)
    upper = half(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        return hull[:1]
    return hull


def lower_hull_1d(pairs):
    """Lower convex hull of ``(x, y)`` pairs with distinct x, left to right.

    Only strict breakpoints are kept, so consecutive hull segments always
    have strictly increasing slopes.
    """
    pts = sorted(pairs)
    out = []
    for p in pts:
        while len(out) >= 2 and cross(out[-2], out[-1], p) <= 0:
            out.pop()
        out.append(p)
    return out


def primitive(v):
    """Primitive integer vector on the ray spanned by a rational vector."""
    fr = [Fraction(x) for x in v]
    den = math.lcm(*(x.denominator for x in fr)) if fr else 1
    ints = [int(x * den) for x in fr]
    g = math.gcd(*ints)
    if g == 0:
        raise ValueError("zero vector has no primitive direction")
    return tuple(x // g for x in ints)


def lattice_length(a, b) -> int:
    """Number of lattice points on segment [a, b] minus one."""
    return math.gcd(*(int(x) - int(y) for x, y in zip(a, b)))


def perp(v):
    """Rotate a 2-vector by +90 degrees."""
    return (-v[1], v[0])


def on_segment(p, a, b) -> bool:
    if cross(a, b, p) != 0:
        return False
    d = sub(b, a)
    t = dot(sub(p, a), d)
    return 0 <= t <= dot(d, d)


def on_ray(p, base, direction) -> bool:
    q = (base[0] + direction[0], base[1] + direction[1])
    if cross(base, q, p) != 0:
        return False
    return dot(sub(p, base), direction) >= 0


def solve2(a11, a12, a21, a22, b1, b2):
    """Solve a 2x2 linear system exactly; raises on a singular matrix."""
    det = a11 * a22 - a12 * a21
    if det == 0:
        raise ZeroDivisionError("singular 2x2 system")
    det = Fraction(det)
    return ((b1 * a22 - a12 * b2) / det, (a11 * b2 - b1 * a21) / det)
