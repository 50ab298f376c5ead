"""Tropical plane curves from regular subdivisions of Newton polygons.

The support of ``F`` is lifted to ``(i, j, F[i, j])`` in Q^3. Lower facets
of the lifted hull are found by gift wrapping: start from the boundary
edges of the Newton polygon and rotate a plane about each known edge until
it touches another lifted point. Each facet projects to a cell of the
regular subdivision, and a facet with height function ``a*i + b*j + c``
corresponds to the curve vertex ``(-a, -b)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, ZeroPolynomial
from .geometry import (
    convex_hull,
    cross,
    dot,
    lattice_length,
    lower_hull_1d,
    on_ray,
    on_segment,
    perp,
    primitive,
    sub,
)
from .tropical import TropPoly, in_hypersurface, prevariety_member

__all__ = [
    "BalancingReport",
    "Cell",
    "CurveEdge",
    "CurveRay",
    "NewtonPolygon",
    "RegularSubdivision",
    "TropicalPlaneCurve",
    "check_balancing",
    "check_connected_codim1",
    "curve_contains",
    "dual_curve",
    "in_hypersurface",
    "newton_polygon",
    "prevariety_member",
    "regular_subdivision",
]


@dataclass(frozen=True)
class NewtonPolygon:
    vertices: tuple
    all_points: tuple

    @property
    def kind(self) -> str:
        return {1: "point", 2: "segment"}.get(len(self.vertices), "polygon")

    def edges(self):
        v = self.vertices
        if len(v) < 3:
            return []
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]


def _support(F):
    if getattr(F, "nvars", 2) != 2:
        raise DimensionMismatch("plane curves need exactly two variables")
    pts = sorted(F.terms)
    if not pts:
        raise ZeroPolynomial("empty support")
    return pts


def newton_polygon(f) -> NewtonPolygon:
    """Newton polygon of a bivariate Laurent or tropical polynomial."""
    pts = _support(f)
    return NewtonPolygon(tuple(convex_hull(pts)), tuple(pts))


@dataclass(frozen=True)
class Cell:
    """A cell of the subdivision.

    ``vertices`` run counterclockwise; ``points`` are all support points whose
    lift lies on the cell's facet. ``dual_point`` is the curve vertex of a
    2-cell (``None`` for lower-dimensional cells).
    """

    vertices: tuple
    points: tuple
    dual_point: tuple | None = None

    def edges(self):
        v = self.vertices
        if len(v) < 3:
            return [(v[0], v[-1])] if len(v) == 2 else []
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]


@dataclass(frozen=True)
class RegularSubdivision:
    cells: tuple
    interior_edges: tuple
    boundary_edges: tuple
    heights: dict

    __hash__ = None


@dataclass(frozen=True)
class CurveEdge:
    endpoints: tuple
    weight: int
    direction: tuple
    dual: tuple


@dataclass(frozen=True)
class CurveRay:
    base: int
    direction: tuple
    weight: int
    dual: tuple


@dataclass(frozen=True)
class TropicalPlaneCurve:
    vertices: tuple
    edges: tuple
    rays: tuple
    lineality: bool = False

    def is_empty(self) -> bool:
        return not self.edges and not self.rays


@dataclass(frozen=True)
class VertexBalance:
    vertex: int
    contributions: tuple
    total: tuple


@dataclass(frozen=True)
class BalancingReport:
    vertices: tuple
    passed: bool


# -- subdivision -------------------------------------------------------------


def _boundary_segments(poly: NewtonPolygon, heights):
    """Split each polygon edge at the breakpoints of its lifted lower hull."""
    segs = []
    for a, b in poly.edges():
        d = sub(b, a)
        on_edge = [p for p in poly.all_points if on_segment(p, a, b)]
        hull = lower_hull_1d([(dot(sub(p, a), d), heights[p]) for p in on_edge])
        by_param = {dot(sub(p, a), d): p for p in on_edge}
        stops = [by_param[t] for t, _ in hull]
        segs.extend(zip(stops, stops[1:]))
    return segs


def _wrap(a, b, points, heights):
    """Lower facet on the left of the directed lower-hull edge a -> b.

    Returns the support points on that facet and the gradient of its height
    function.
    """
    d = sub(b, a)
    dd = dot(d, d)
    ha, hb = heights[a], heights[b]
    rise = Fraction(hb - ha, 1) / dd

    def base_height(x):
        return ha + rise * dot(sub(x, a), d)

    best = None
    for r in points:
        o = cross(a, b, r)
        if o > 0:
            s = (heights[r] - base_height(r)) / o
            if best is None or s < best:
                best = s
    if best is None:
        raise AssertionError(f"no support point left of {a}->{b}")
    grad = (rise * d[0] - best * d[1], rise * d[1] + best * d[0])
    on_facet = tuple(
        p for p in points if heights[p] == ha + grad[0] * (p[0] - a[0]) + grad[1] * (p[1] - a[1])
    )
    return on_facet, grad


def _is_boundary(c, e, points):
    return all(cross(c, e, p) >= 0 for p in points)


def _subdivide_polygon(poly, heights):
    points = poly.all_points
    start = _boundary_segments(poly, heights)
    queue = deque(start)
    done = set()
    cells = {}
    while queue:
        a, b = queue.popleft()
        if (a, b) in done:
            continue
        facet, grad = _wrap(a, b, points, heights)
        verts = tuple(convex_hull(facet))
        key = frozenset(verts)
        if key in cells:
            done.add((a, b))
            continue
        cells[key] = Cell(verts, facet, (-grad[0], -grad[1]))
        n = len(verts)
        for i in range(n):
            c, e = verts[i], verts[(i + 1) % n]
            done.add((c, e))
            if not _is_boundary(c, e, points) and (e, c) not in done:
                queue.append((e, c))
    ordered = sorted(cells.values(), key=lambda c: c.vertices)
    owners: dict = {}
    boundary = []
    for idx, cell in enumerate(ordered):
        for c, e in cell.edges():
            if _is_boundary(c, e, points):
                boundary.append((c, e, idx))
            else:
                owners.setdefault(tuple(sorted((c, e))), []).append(idx)
    for edge, who in owners.items():
        if len(who) != 2:
            raise AssertionError(f"interior edge {edge} borders {len(who)} cells")
    return ordered, owners, sorted(boundary)


def _subdivide_segment(poly, heights):
    a, b = poly.vertices
    d = primitive(sub(b, a))
    hull = lower_hull_1d(
        [(dot(sub(p, a), d) // dot(d, d), heights[p]) for p in poly.all_points]
    )
    stops = [(a[0] + k * d[0], a[1] + k * d[1]) for k, _ in hull]
    cells = []
    for p, q in zip(stops, stops[1:]):
        on = tuple(x for x in poly.all_points if on_segment(x, p, q))
        cells.append(Cell((p, q), on))
    return cells, d, hull


def regular_subdivision(F: TropPoly) -> RegularSubdivision:
    """Regular subdivision of the Newton polygon induced by the values of F."""
    poly = newton_polygon(F)
    heights = dict(F.terms)
    if poly.kind == "point":
        p = poly.vertices[0]
        return RegularSubdivision((Cell((p,), (p,)),), (), (), heights)
    if poly.kind == "segment":
        cells, _, _ = _subdivide_segment(poly, heights)
        segs = tuple(c.vertices for c in cells)
        return RegularSubdivision(tuple(cells), (), segs, heights)
    cells, owners, boundary = _subdivide_polygon(poly, heights)
    return RegularSubdivision(
        tuple(cells),
        tuple(sorted(owners)),
        tuple((c, e) for c, e, _ in boundary),
        heights,
    )


# -- dual curve --------------------------------------------------------------


def dual_curve(F: TropPoly) -> TropicalPlaneCurve:
    """Tropical curve of F: one vertex per 2-cell, one edge per interior
    subdivision edge and one ray per boundary subdivision edge.

    Collinear support gives parallel lines (``lineality`` set); a single
    term gives the empty curve.
    """
    poly = newton_polygon(F)
    heights = dict(F.terms)
    if poly.kind == "point":
        return TropicalPlaneCurve((), (), ())
    if poly.kind == "segment":
        return _parallel_lines(poly, heights)
    cells, owners, boundary = _subdivide_polygon(poly, heights)
    vertices = tuple(c.dual_point for c in cells)
    edges = []
    for (a, b), (i, j) in sorted(owners.items()):
        direction = primitive(sub(vertices[j], vertices[i]))
        edges.append(CurveEdge((i, j), lattice_length(a, b), direction, (a, b)))
    rays = []
    for a, b, idx in boundary:
        rays.append(CurveRay(idx, primitive(perp(sub(b, a))), lattice_length(a, b), (a, b)))
    return TropicalPlaneCurve(vertices, tuple(edges), tuple(rays))


def _parallel_lines(poly, heights):
    _, d, hull = _subdivide_segment(poly, heights)
    a = poly.vertices[0]
    dd = dot(d, d)
    normal = perp(d)
    vertices = []
    rays = []
    for (k1, v1), (k2, v2) in zip(hull, hull[1:]):
        # terms tie where w . d = s
        s = Fraction(v1 - v2) / (k2 - k1)
        base = (s * d[0] / dd, s * d[1] / dd)
        p = (a[0] + k1 * d[0], a[1] + k1 * d[1])
        q = (a[0] + k2 * d[0], a[1] + k2 * d[1])
        idx = len(vertices)
        vertices.append(base)
        m = k2 - k1
        rays.append(CurveRay(idx, normal, m, (p, q)))
        rays.append(CurveRay(idx, (-normal[0], -normal[1]), m, (p, q)))
    return TropicalPlaneCurve(tuple(vertices), (), tuple(rays), lineality=True)


# -- checks ------------------------------------------------------------------


def check_balancing(C: TropicalPlaneCurve) -> BalancingReport:
    incident: dict = {i: [] for i in range(len(C.vertices))}
    for e in C.edges:
        i, j = e.endpoints
        incident[i].append((e.direction, e.weight))
        incident[j].append(((-e.direction[0], -e.direction[1]), e.weight))
    for r in C.rays:
        incident[r.base].append((r.direction, r.weight))
    report = []
    for i, contribs in incident.items():
        total = (
            sum(w * d[0] for d, w in contribs),
            sum(w * d[1] for d, w in contribs),
        )
        report.append(VertexBalance(i, tuple(contribs), total))
    return BalancingReport(tuple(report), all(v.total == (0, 0) for v in report))


def check_connected_codim1(C: TropicalPlaneCurve) -> bool:
    """Are the maximal cells (edges and rays) connected via shared vertices?"""
    cells = [e.endpoints for e in C.edges] + [(r.base,) for r in C.rays]
    if len(cells) <= 1:
        return True
    parent = list(range(len(cells)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    first_at: dict = {}
    for idx, verts in enumerate(cells):
        for v in verts:
            if v in first_at:
                parent[find(idx)] = find(first_at[v])
            else:
                first_at[v] = idx
    return len({find(i) for i in range(len(cells))}) == 1


def curve_contains(C: TropicalPlaneCurve, w) -> bool:
    """Exact point location on the curve's support."""
    w = tuple(Fraction(x) for x in w)
    V = C.vertices
    for e in C.edges:
        if on_segment(w, V[e.endpoints[0]], V[e.endpoints[1]]):
            return True
    for r in C.rays:
        if on_ray(w, V[r.base], r.direction):
            return True
    return False
