"""Initial forms over the residue field and the membership criterion for
principal ideals: ``w`` is on the tropical hypersurface of ``f`` exactly
when ``in_w(f)`` is not a unit, i.e. not a single monomial term.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import DimensionMismatch, NotInValueGroup, ZeroPolynomial
from .laurent import LaurentPoly
from .tropical import format_monomial, grlex_key
from .valuation import as_rat, residue, split, val


@dataclass(frozen=True)
class ResiduePoly:
    """Laurent polynomial over Q (``modulus`` None) or Z/p."""

    nvars: int
    terms: Mapping = field(default_factory=dict)
    modulus: int | None = None
    names: tuple = ()

    def __post_init__(self):
        clean = {tuple(u): c for u, c in self.terms.items() if c != 0}
        object.__setattr__(
            self, "terms", dict(sorted(clean.items(), key=lambda kv: grlex_key(kv[0])))
        )

    __hash__ = None

    def __call__(self, point):
        """Evaluate at a point of the residue torus."""
        p = self.modulus
        total = 0
        for u, c in self.terms.items():
            term = c
            for x, k in zip(point, u):
                term = term * (pow(x, k, p) if p else Fraction(x) ** k)
            total += term
        return total % p if p else total

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for u, c in self.terms.items():
            mono = format_monomial(u, self.names)
            if mono == "1":
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def field_name(self) -> str:
        return f"Z/{self.modulus}" if self.modulus else "Q"


def _check_w(f: LaurentPoly, w: Sequence):
    if len(w) != f.nvars:
        raise DimensionMismatch(f"weight has {len(w)} coordinates, need {f.nvars}")
    w = [as_rat(x) for x in w]
    if f.spec.kind == "padic" and any(x.denominator != 1 for x in w):
        raise NotInValueGroup(f"p-adic weights must be integral, got {w}")
    return w


def initial_form(f: LaurentPoly, w: Sequence) -> ResiduePoly:
    if f.is_zero():
        raise ZeroPolynomial("initial form of the zero polynomial")
    w = _check_w(f, w)
    spec = f.spec
    vals = {u: val(c, spec) for u, c in f.terms.items()}
    weighted = {u: v + sum(a * b for a, b in zip(u, w)) for u, v in vals.items()}
    low = min(weighted.values())
    terms = {}
    for u, c in f.terms.items():
        if weighted[u] == low:
            terms[u] = residue(split(-vals[u], spec) * c, spec)
    modulus = spec.p if spec.kind == "padic" else None
    return ResiduePoly(f.nvars, terms, modulus, f.names)


def is_monomial(g: ResiduePoly) -> bool:
    return len(g.terms) == 1


def member_via_initial(f: LaurentPoly, w: Sequence) -> bool:
    return not is_monomial(initial_form(f, w))
