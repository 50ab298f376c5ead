"""Min-plus arithmetic and tropical polynomials.

Tropical numbers are ``Fraction`` values or ``INF``; ``a (+) b = min(a, b)``
and ``a (x) b = a + b``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from . import _kernels
from .errors import DimensionMismatch, NoRoots, ParseError, UnknownVariable
from .geometry import lower_hull_1d
from .valuation import INF, ExtRat, as_rat

Monomial = tuple


def tadd(a: ExtRat, b: ExtRat) -> ExtRat:
    return min(a, b)


def tmul(a: ExtRat, b: ExtRat) -> ExtRat:
    if a == INF or b == INF:
        return INF
    return a + b


def tpow(a: ExtRat, n: int) -> ExtRat:
    if n < 0:
        raise ValueError("tropical powers need n >= 0")
    if a == INF:
        return INF if n > 0 else Fraction(0)
    return a * n


def grlex_key(u: Monomial):
    """Sort key placing higher total degree first, then lex-descending."""
    return (-sum(u), tuple(-e for e in u))


@dataclass(frozen=True)
class TropPoly:
    """Finite map monomial -> finite tropical coefficient."""

    nvars: int
    terms: Mapping[Monomial, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for u, v in self.terms.items():
            u = tuple(int(e) for e in u)
            if len(u) != self.nvars:
                raise DimensionMismatch(f"monomial {u} has wrong length")
            if v == INF:
                continue
            clean[u] = as_rat(v)
        object.__setattr__(
            self, "terms", dict(sorted(clean.items(), key=lambda kv: grlex_key(kv[0])))
        )

    __hash__ = None

    def __len__(self):
        return len(self.terms)

    def __str__(self):
        return format_trop(self)


def _check_point(F: TropPoly, w):
    if len(w) != F.nvars:
        raise DimensionMismatch(f"point has {len(w)} coordinates, expected {F.nvars}")
    if not F.terms:
        raise ValueError("empty tropical polynomial")
    return [as_rat(x) for x in w]


def _term_values(F: TropPoly, w):
    w = _check_point(F, w)
    return {u: v + sum(a * b for a, b in zip(u, w)) for u, v in F.terms.items()}


def trop_eval(F: TropPoly, w: Sequence) -> Fraction:
    return min(_term_values(F, w).values())


def argmin_terms(F: TropPoly, w: Sequence) -> set:
    vals = _term_values(F, w)
    best = min(vals.values())
    return {u for u, v in vals.items() if v == best}


def in_hypersurface(F: TropPoly, w: Sequence) -> bool:
    return len(argmin_terms(F, w)) >= 2


def trop_eval_many(F: TropPoly, ws, backend=None):
    """Return ``(values, counts)`` for a batch of points via the fast kernel."""
    ws = [_check_point(F, w) for w in ws]
    return _kernels.batch_min_count(list(F.terms), list(F.terms.values()), ws, backend)


def in_hypersurface_many(F: TropPoly, ws, backend=None) -> list:
    _, counts = trop_eval_many(F, ws, backend)
    return [c >= 2 for c in counts]


def univariate_roots(F: TropPoly) -> list:
    """Roots of a univariate tropical polynomial with multiplicities.

    Returns ``[(root, multiplicity), ...]`` with increasing roots. A root is
    a breakpoint of the lower hull of ``{(exponent, value)}``; its
    multiplicity is the drop in slope there.
    """
    if F.nvars != 1:
        raise DimensionMismatch("univariate_roots needs one variable")
    pts = [(u[0], v) for u, v in F.terms.items()]
    hull = lower_hull_1d(pts)
    if len(hull) < 2:
        raise NoRoots("a tropical monomial has no roots")
    roots = []
    for (e1, v1), (e2, v2) in zip(hull, hull[1:]):
        roots.append((Fraction(v1 - v2) / (e2 - e1), e2 - e1))
    return sorted(roots)


def prevariety_member(Fs: Sequence[TropPoly], w: Sequence) -> bool:
    """Membership in the intersection of the given tropical hypersurfaces.

    This is the prevariety of these particular generators; it can be
    strictly larger than the tropical variety of the ideal they generate.
    """
    if not Fs:
        raise ValueError("need at least one tropical polynomial")
    n = Fs[0].nvars
    if any(F.nvars != n for F in Fs) or len(w) != n:
        raise DimensionMismatch("generators and point must share one dimension")
    return all(in_hypersurface(F, w) for F in Fs)


# -- text I/O ------------------------------------------------------------


def format_monomial(u: Monomial, names: Sequence[str]) -> str:
    parts = []
    for name, e in zip(names, u):
        if e == 0:
            continue
        if e == 1:
            parts.append(name)
        elif e > 0:
            parts.append(f"{name}^{e}")
        else:
            parts.append(f"{name}^({e})")
    return "*".join(parts) or "1"


def format_trop(F: TropPoly, names: Sequence[str] | None = None) -> str:
    names = names or default_names(F.nvars)
    if not F.terms:
        return "inf"
    parts = []
    for u, v in F.terms.items():
        lin = [f"{e}*{n}" if e != 1 else n for n, e in zip(names, u) if e != 0]
        parts.append(" + ".join([str(v)] + lin) if v != 0 or not lin else " + ".join(lin))
    return "min(" + ", ".join(parts) + ")"


def default_names(n: int) -> list:
    base = ["x", "y", "z", "w"]
    if n <= len(base):
        return base[:n]
    return [f"x{i + 1}" for i in range(n)]


_MONO_RE = re.compile(r"\s*([A-Za-z_][A-Za-z_0-9]*)\s*(?:\^\s*(\(\s*-?\d+\s*\)|-?\d+))?\s*")


def parse_min_poly(text: str, names: Sequence[str]) -> TropPoly:
    """Parse ``"min-poly: v1,mono1; v2,mono2; ..."`` (prefix optional).

    Each ``mono`` is ``1`` or a ``*``-product of ``name[^int]`` factors and
    each value a rational literal (or ``inf`` to drop the term).
    """
    body = text
    offset = 0
    m = re.match(r"\s*min-poly\s*:", text)
    if m:
        body = text[m.end():]
        offset = m.end()
    index = {n: i for i, n in enumerate(names)}
    terms: dict = {}
    pos = offset
    for chunk in body.split(";"):
        start = pos
        pos += len(chunk) + 1
        if not chunk.strip():
            continue
        if "," not in chunk:
            raise ParseError(start, ["','"], text)
        vtext, _, mtext = chunk.partition(",")
        vtext = vtext.strip()
        if vtext.lower() in ("inf", "oo"):
            value = INF
        else:
            try:
                value = Fraction(vtext)
            except (ValueError, ZeroDivisionError):
                raise ParseError(start, ["rational value"], text) from None
        u = [0] * len(names)
        mtext = mtext.strip()
        if mtext != "1":
            for factor in mtext.split("*"):
                fm = _MONO_RE.fullmatch(factor)
                if not fm:
                    raise ParseError(start + len(vtext) + 1, ["monomial"], text)
                name, exp = fm.group(1), fm.group(2)
                if name not in index:
                    raise UnknownVariable(f"unknown variable {name!r}")
                u[index[name]] += int(exp.strip("() ")) if exp else 1
        u = tuple(u)
        if value == INF:
            continue
        terms[u] = min(terms.get(u, INF), value)
    return TropPoly(len(names), terms)
