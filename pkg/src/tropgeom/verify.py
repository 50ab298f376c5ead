"""Point-level checks relating classical zeros to tropical curves.

``check_point`` covers the easy direction (valuations of zeros lie on the
tropical hypersurface). ``first_order_witness`` approaches the hard
direction only to first order: it finds a point whose leading terms cancel,
certified by ``delta = val(f(point)) - trop(f)(w) > 0``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, NotInTropicalVariety, ZeroCoordinate
from .initial import initial_form, is_monomial
from .laurent import LaurentPoly, evaluate, tropicalize
from .tropical import in_hypersurface, trop_eval
from .valuation import (
    INF,
    PuiseuxSeries,
    ValuationSpec,
    as_rat,
    coerce,
    is_zero,
    split,
    val,
)

DEFAULT_SCAN_BOUND = 50


class ZeroState(enum.Enum):
    EXACT = "exact zero"
    UP_TO_PRECISION = "zero up to precision"
    NONZERO = "nonzero"


@dataclass(frozen=True)
class PointCheck:
    point: tuple
    value: object
    is_zero: ZeroState
    val_vector: tuple
    in_trop: bool
    trop_value: Fraction
    margin: object = None

    @property
    def conclusive(self) -> bool:
        """Whether this point counts as a zero for the soundness check."""
        if self.is_zero is ZeroState.EXACT:
            return True
        return self.is_zero is ZeroState.UP_TO_PRECISION and self.margin >= 1

    @property
    def sound(self) -> bool:
        return not self.conclusive or self.in_trop


def check_point(f: LaurentPoly, point: Sequence) -> PointCheck:
    pt = tuple(coerce(x, f.spec) for x in point)
    if len(pt) != f.nvars:
        raise DimensionMismatch("point dimension does not match polynomial")
    for i, x in enumerate(pt):
        if is_zero(x):
            raise ZeroCoordinate(f"coordinate {i} is zero")
    value = evaluate(f, pt)
    vvec = tuple(val(x, f.spec) for x in pt)
    F = tropicalize(f)
    tv = trop_eval(F, vvec)
    margin = None
    if isinstance(value, PuiseuxSeries) and value.is_zero():
        if value.is_exact():
            state = ZeroState.EXACT
        else:
            state = ZeroState.UP_TO_PRECISION
            margin = value.precision - tv
    elif is_zero(value):
        state = ZeroState.EXACT
    else:
        state = ZeroState.NONZERO
    return PointCheck(pt, value, state, vvec, in_hypersurface(F, vvec), tv, margin)


def line_case_analysis(w: Sequence):
    """A Puiseux point on V(x + y + 1) with valuation vector ``w``.

    Returns ``None`` when ``w`` is not on the tropical line min(x, y, 0).
    """
    a, b = (as_rat(x) for x in w)
    t = PuiseuxSeries.monomial
    if a > 0 and b == 0:
        return (t(a), -1 - t(a))
    if a == 0 and b > 0:
        return (-1 + t(b), -t(b))
    if a == b and a < 0:
        return (t(a), -t(a) - 1)
    if a == 0 and b == 0:
        return (PuiseuxSeries.constant(1), PuiseuxSeries.constant(-2))
    return None


@dataclass(frozen=True)
class Witness:
    residue_point: tuple
    point: tuple
    value: object
    delta: object


def _divisors(n: int):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(coeffs):
    """Nonzero rational roots of sum(coeffs[k] * y^k), sorted ascending."""
    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    lo = 0
    while lo < len(coeffs) and coeffs[lo] == 0:
        lo += 1
    coeffs = coeffs[lo:]
    if len(coeffs) < 2:
        return []
    den = math.lcm(*(c.denominator for c in coeffs))
    ints = [int(c * den) for c in coeffs]
    roots = set()
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            for r in (Fraction(p, q), Fraction(-p, q)):
                if sum(c * r**k for k, c in enumerate(ints)) == 0:
                    roots.add(r)
    return sorted(roots)


def _scan_rational(g, bound):
    for k in range(1, bound + 1):
        for a in (Fraction(k), Fraction(-k)):
            by_j: dict = {}
            for (i, j), c in g.terms.items():
                by_j[j] = by_j.get(j, Fraction(0)) + c * a**i
            if all(c == 0 for c in by_j.values()):
                return (a, Fraction(1))
            jmin = min(by_j)
            coeffs = [Fraction(0)] * (max(by_j) - jmin + 1)
            for j, c in by_j.items():
                coeffs[j - jmin] = c
            roots = rational_roots(coeffs)
            if roots:
                return (a, roots[0])
    return None


def _scan_modular(g, p, bound):
    for a in range(1, min(bound, p - 1) + 1):
        for b in range(1, p):
            if g((a, b)) == 0:
                return (a, b)
    return None


def _lift(spec: ValuationSpec, w, r):
    if spec.kind == "trivial":
        return Fraction(r)
    return split(w, spec) * coerce(r, spec)


def first_order_witness(f: LaurentPoly, w: Sequence, bound: int = DEFAULT_SCAN_BOUND):
    """Search for a point with valuation ``w`` whose leading terms cancel.

    Returns a :class:`Witness` or ``None`` when the bounded scan finds no
    residue-field zero of ``in_w(f)`` (inconclusive, not a disproof).
    """
    if f.nvars != 2:
        raise DimensionMismatch("witness search is implemented for plane curves")
    w = tuple(as_rat(x) for x in w)
    g = initial_form(f, w)
    if is_monomial(g):
        raise NotInTropicalVariety(f"in_w(f) = {g} is a unit at w = {w}")
    spec = f.spec
    if spec.kind == "padic":
        found = _scan_modular(g, spec.p, bound)
    else:
        found = _scan_rational(g, bound)
    if found is None:
        return None
    point = tuple(_lift(spec, wi, r) for wi, r in zip(w, found))
    value = evaluate(f, point)
    tv = trop_eval(tropicalize(f), w)
    if spec.kind == "trivial":
        # Q with the trivial valuation has no point of valuation w != 0;
        # certify inside Q{{t}} instead
        emb = LaurentPoly(2, ValuationSpec.puiseux(), f.terms, f.names)
        tpoint = tuple(PuiseuxSeries.monomial(wi, r) for wi, r in zip(w, found))
        lead = val(evaluate(emb, tpoint), emb.spec)
    else:
        lead = val(value, spec)
    delta = INF if lead == INF else lead - tv
    return Witness(found, point, value, delta)
