"""Worked example polynomials and random generators for property checks."""

from __future__ import annotations

import random
from fractions import Fraction

from .geometry import cross
from .laurent import LaurentPoly, parse_poly
from .valuation import ValuationSpec

# name -> (text, field, variables)
EXAMPLES = {
    "tropical-quadric-2adic": ("6*x^2+5*x*y+10*y^2+3*x-y+4", "padic:2", "x,y"),
    "subdivision-2adic": ("2*x^2+x*y-6*y^2+5*x-3*y+2", "padic:2", "x,y"),
    # as printed: 81*y^2 and 3*y^2 merge into 84*y^2
    "cubic-3adic": (
        "27*x^3+6*x^2*y+12*x*y^2+81*y^2+3*x^2+5*x*y+3*y^2+3*x+2*y+243",
        "padic:3",
        "x,y",
    ),
    "cubic-3adic-full": (
        "27*x^3+6*x^2*y+12*x*y^2+81*y^3+3*x^2+5*x*y+3*y^2+3*x+2*y+243",
        "padic:3",
        "x,y",
    ),
    "groebner-2adic": ("2*x^2+x*y+6*y^2+5*x-3*y+4", "padic:2", "x,y"),
    "fundamental-2adic": ("4*x^2+x*y-4*y^2+x-y-4", "padic:2", "x,y"),
    "fan-trivial": ("x^2*y^2+x^3+y^3+1", "trivial", "x,y"),
    "balancing-trivial": ("x^2+3*x+2+x^2*y+2*x*y^2-2*y^2", "trivial", "x,y"),
    "newton-trivial": ("x^2*y+5*y^2-3*x+2", "trivial", "x,y"),
    "line-trivial": ("x+y+1", "trivial", "x,y"),
    "line-puiseux": ("x+y+1", "puiseux", "x,y"),
    "elliptic-puiseux": (
        "(t^3)*x^3+x^2*y+x*y^2+(t^3)*y^3+x^2+(t^(-1))*x*y+y^2+x+y+t^3",
        "puiseux",
        "x,y",
    ),
}


def load(name: str) -> LaurentPoly:
    text, field, names = EXAMPLES[name]
    return parse_poly(text, ValuationSpec.parse(field), names.split(","))


def all_examples():
    return {name: load(name) for name in EXAMPLES}


def random_padic_coefficient(rng: random.Random, p: int = 2, spread: int = 3) -> Fraction:
    """Random nonzero rational with p-adic valuation in [-spread, spread]."""
    unit = rng.choice([1, -1]) * rng.randrange(1, 20)
    while unit % p == 0:
        unit += 1 if unit > 0 else -1
    den = rng.randrange(1, 10)
    while den % p == 0:
        den += 1
    return Fraction(unit, den) * Fraction(p) ** rng.randint(-spread, spread)


def random_support(rng: random.Random, max_points: int = 12, radius: int = 3):
    """Random support in [-radius, radius]^2 that is not contained in a line."""
    grid = [(i, j) for i in range(-radius, radius + 1) for j in range(-radius, radius + 1)]
    while True:
        pts = rng.sample(grid, rng.randint(3, max_points))
        a, b = pts[0], pts[1]
        if any(cross(a, b, c) != 0 for c in pts[2:]):
            return sorted(pts)


def random_padic_curve(rng: random.Random, p: int = 2, max_points: int = 12) -> LaurentPoly:
    pts = random_support(rng, max_points)
    terms = {u: random_padic_coefficient(rng, p) for u in pts}
    return LaurentPoly(2, ValuationSpec.padic(p), terms, ("x", "y"))
