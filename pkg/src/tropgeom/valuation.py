"""Exact scalars over the three supported valued fields.

* ``trivial``: Q with val(a) = 0 for every a != 0.
* ``padic:p``: Q with the p-adic valuation. Scalars stay exact rationals.
* ``puiseux``: truncated Puiseux series in ``t`` with rational coefficients.

Extended rationals (the tropical numbers) are ``Fraction`` values plus the
float ``INF`` used as the tropical additive identity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import NegativeValuation, NotInValueGroup, PrecisionExhausted

INF = math.inf
DEFAULT_PRECISION = Fraction(10)

Rat = Fraction
ExtRat = Union[Fraction, float]


def as_rat(x) -> Fraction:
    """Convert an int, Fraction or rational literal string to ``Fraction``."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass a Fraction or string")
    return Fraction(x)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class ValuationSpec:
    """Which valued field the coefficients live in."""

    kind: str
    p: int | None = None
    precision: Fraction = DEFAULT_PRECISION

    def __post_init__(self):
        if self.kind not in ("trivial", "padic", "puiseux"):
            raise ValueError(f"unknown valuation kind {self.kind!r}")
        if self.kind == "padic":
            if not isinstance(self.p, int) or not is_prime(self.p):
                raise ValueError(f"p-adic valuation needs a prime, got {self.p!r}")
        elif self.p is not None:
            raise ValueError("p is only meaningful for padic valuations")
        object.__setattr__(self, "precision", as_rat(self.precision))
        if self.precision <= 0:
            raise ValueError("precision must be positive")

    @classmethod
    def trivial(cls) -> ValuationSpec:
        return cls("trivial")

    @classmethod
    def padic(cls, p: int) -> ValuationSpec:
        return cls("padic", p)

    @classmethod
    def puiseux(cls, precision=DEFAULT_PRECISION) -> ValuationSpec:
        return cls("puiseux", None, as_rat(precision))

    @classmethod
    def parse(cls, text: str) -> ValuationSpec:
        """Parse ``trivial``, ``padic:<p>`` or ``puiseux[:<precision>]``."""
        name, _, arg = text.strip().partition(":")
        name = name.strip().lower()
        if name == "trivial" and not arg:
            return cls.trivial()
        if name == "padic" and arg:
            try:
                p = int(arg)
            except ValueError:
                raise ValueError(f"bad prime in field spec {text!r}") from None
            return cls.padic(p)
        if name == "puiseux":
            if not arg:
                return cls.puiseux()
            try:
                return cls.puiseux(Fraction(arg))
            except (ValueError, ZeroDivisionError):
                raise ValueError(f"bad precision in field spec {text!r}") from None
        raise ValueError(f"unknown field spec {text!r}")

    def __str__(self):
        if self.kind == "padic":
            return f"padic:{self.p}"
        if self.kind == "puiseux":
            return f"puiseux:{self.precision}"
        return "trivial"


def _fmt_exp(e: Fraction) -> str:
    if e.denominator == 1 and e >= 0:
        return str(e)
    return f"({e})"


def _fmt_tpow(e: Fraction) -> str:
    if e == 1:
        return "t"
    return f"t^{_fmt_exp(e)}"


@dataclass(frozen=True)
class PuiseuxSeries:
    """A Puiseux series known up to (but excluding) ``t^precision``.

    ``terms`` holds ``(exponent, coefficient)`` pairs with strictly
    increasing exponents, all below ``precision``. ``precision == INF``
    means the series is an exact finite sum.
    """

    terms: tuple = ()
    precision: ExtRat = INF

    def __post_init__(self):
        prev = None
        for e, c in self.terms:
            if not isinstance(e, Fraction) or not isinstance(c, Fraction):
                raise TypeError("exponents and coefficients must be Fractions")
            if c == 0:
                raise ValueError("zero coefficient stored in Puiseux series")
            if prev is not None and e <= prev:
                raise ValueError("exponents must be strictly increasing")
            if e >= self.precision:
                raise ValueError("term exponent at or above precision")
            prev = e

    @classmethod
    def from_terms(cls, pairs: Iterable, precision: ExtRat = INF) -> PuiseuxSeries:
        """Build a series from arbitrary pairs, combining and truncating."""
        acc: dict[Fraction, Fraction] = {}
        for e, c in pairs:
            e = as_rat(e)
            acc[e] = acc.get(e, Fraction(0)) + as_rat(c)
        if precision is not INF and precision != INF:
            precision = as_rat(precision)
        terms = tuple(
            (e, c) for e, c in sorted(acc.items()) if c != 0 and e < precision
        )
        return cls(terms, precision)

    @classmethod
    def constant(cls, c) -> PuiseuxSeries:
        return cls.from_terms([(0, c)])

    @classmethod
    def monomial(cls, e, c=1) -> PuiseuxSeries:
        return cls.from_terms([(e, c)])

    @classmethod
    def coerce(cls, x) -> PuiseuxSeries:
        if isinstance(x, PuiseuxSeries):
            return x
        return cls.constant(as_rat(x))

    # -- inspection -----------------------------------------------------

    def is_exact(self) -> bool:
        return self.precision == INF

    def is_zero(self) -> bool:
        """No known terms (zero at least up to the precision)."""
        return not self.terms

    def valuation(self) -> ExtRat:
        if self.terms:
            return self.terms[0][0]
        if self.is_exact():
            return INF
        raise PrecisionExhausted(
            f"series is zero up to O(t^{self.precision}); valuation unknown"
        )

    def _val_bound(self) -> ExtRat:
        """Lower bound on the valuation (exact when terms are present)."""
        return self.terms[0][0] if self.terms else self.precision

    def coefficient(self, e) -> Fraction:
        e = as_rat(e)
        if e >= self.precision:
            raise PrecisionExhausted(f"coefficient of t^{e} beyond precision")
        for ee, c in self.terms:
            if ee == e:
                return c
        return Fraction(0)

    # -- arithmetic -----------------------------------------------------

    def __neg__(self):
        return PuiseuxSeries(tuple((e, -c) for e, c in self.terms), self.precision)

    def __add__(self, other):
        try:
            other = PuiseuxSeries.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        prec = min(self.precision, other.precision)
        return PuiseuxSeries.from_terms(self.terms + other.terms, prec)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = PuiseuxSeries.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = PuiseuxSeries.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        prec = min(
            self.precision + other._val_bound(), other.precision + self._val_bound()
        )
        pairs = [
            (e1 + e2, c1 * c2) for e1, c1 in self.terms for e2, c2 in other.terms
        ]
        return PuiseuxSeries.from_terms(pairs, prec)

    __rmul__ = __mul__

    def truncate(self, precision) -> PuiseuxSeries:
        prec = min(self.precision, as_rat(precision))
        return PuiseuxSeries.from_terms(self.terms, prec)

    def inverse(self, precision=DEFAULT_PRECISION) -> PuiseuxSeries:
        """Multiplicative inverse.

        Exact monomials invert exactly. Other exact series are expanded as a
        geometric series up to absolute precision ``precision``; inexact
        series keep their own relative precision.
        """
        if not self.terms:
            if self.is_exact():
                raise ZeroDivisionError("inverse of zero series")
            raise PrecisionExhausted("cannot invert a series with no known terms")
        v, c = self.terms[0]
        if len(self.terms) == 1 and self.is_exact():
            return PuiseuxSeries(((-v, 1 / c),))
        if self.is_exact():
            rel = as_rat(precision) + v
        else:
            rel = self.precision - v
        # self = c t^v (1 + r), val(r) > 0
        r = PuiseuxSeries.from_terms(((e - v, a / c) for e, a in self.terms[1:]), rel)
        step = r._val_bound()
        total = PuiseuxSeries.from_terms([(0, 1)], rel)
        power = PuiseuxSeries.from_terms([(0, 1)], rel)
        neg_r = -r
        k = 0
        while step != INF and k * step < rel:
            power = power * neg_r
            if not power.terms:
                break
            total = total + power
            k += 1
        total = total.truncate(rel)
        return PuiseuxSeries.from_terms(((e - v, a / c) for e, a in total.terms), rel - v)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        return series_power(self, k, DEFAULT_PRECISION)

    # -- display --------------------------------------------------------

    def __str__(self):
        parts = []
        for e, c in self.terms:
            if e == 0:
                body = str(c)
            elif c == 1:
                body = _fmt_tpow(e)
            elif c == -1:
                body = "-" + _fmt_tpow(e)
            else:
                body = f"{c}*{_fmt_tpow(e)}"
            parts.append(body)
        if not self.is_exact():
            parts.append(f"O({_fmt_tpow(self.precision)})")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def literal(self) -> str:
        """Text accepted back by the polynomial parser (exact series only)."""
        if not self.is_exact():
            raise ValueError("only exact series have a literal form")
        return str(self)


Scalar = Union[Fraction, PuiseuxSeries]


def series_power(a: PuiseuxSeries, k: int, precision=DEFAULT_PRECISION) -> PuiseuxSeries:
    if k < 0:
        return series_power(a.inverse(precision), -k, precision)
    result = PuiseuxSeries.constant(1)
    base = a
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


def pui_add(a: PuiseuxSeries, b: PuiseuxSeries) -> PuiseuxSeries:
    return a + b


def pui_mul(a: PuiseuxSeries, b: PuiseuxSeries) -> PuiseuxSeries:
    return a * b


def pui_neg(a: PuiseuxSeries) -> PuiseuxSeries:
    return -a


# -- field-level operations ------------------------------------------------


def coerce(x, spec: ValuationSpec) -> Scalar:
    """Turn an int/Fraction/series into a scalar tagged for ``spec``."""
    if spec.kind == "puiseux":
        return PuiseuxSeries.coerce(x)
    if isinstance(x, PuiseuxSeries):
        raise TypeError(f"Puiseux series used under {spec} valuation")
    return as_rat(x)


def is_zero(a: Scalar) -> bool:
    if isinstance(a, PuiseuxSeries):
        return a.is_zero()
    return a == 0


def power(a: Scalar, k: int, spec: ValuationSpec) -> Scalar:
    if isinstance(a, PuiseuxSeries):
        return series_power(a, k, spec.precision)
    return a**k


def padic_order(n: int, p: int) -> int:
    n = abs(n)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def val(a, spec: ValuationSpec) -> ExtRat:
    """Valuation of a scalar; ``INF`` for zero."""
    a = coerce(a, spec)
    if isinstance(a, PuiseuxSeries):
        return a.valuation()
    if a == 0:
        return INF
    if spec.kind == "trivial":
        return Fraction(0)
    p = spec.p
    return Fraction(padic_order(a.numerator, p) - padic_order(a.denominator, p))


def split(u, spec: ValuationSpec) -> Scalar:
    """The splitting u -> t^u of the valuation (p^u, t^u or 1)."""
    u = as_rat(u)
    if spec.kind == "padic":
        if u.denominator != 1:
            raise NotInValueGroup(f"{u} is not in the value group Z of val_{spec.p}")
        return Fraction(spec.p) ** int(u)
    if spec.kind == "puiseux":
        return PuiseuxSeries.monomial(u)
    if u != 0:
        raise NotInValueGroup(f"{u} is not in the trivial value group {{0}}")
    return Fraction(1)


def residue(a, spec: ValuationSpec):
    """Image of ``a`` in the residue field (Q, or Z/p as an int in [0, p))."""
    a = coerce(a, spec)
    if isinstance(a, PuiseuxSeries):
        if a.terms and a.terms[0][0] < 0:
            raise NegativeValuation(f"val = {a.terms[0][0]} < 0")
        if a.precision <= 0:
            raise PrecisionExhausted("constant term beyond precision")
        return a.coefficient(0)
    if spec.kind == "trivial":
        return a
    p = spec.p
    if a == 0:
        return 0
    if val(a, spec) < 0:
        raise NegativeValuation(f"val_{p}({a}) < 0")
    return a.numerator * pow(a.denominator, -1, p) % p
