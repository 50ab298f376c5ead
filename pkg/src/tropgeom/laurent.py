"""Laurent polynomials over a valued field.

Text syntax (whitespace ignored)::

    poly    := ['-'] term { ('+'|'-') term }
    term    := coeff [ '*' monos ] | monos
    monos   := mono { '*' mono }
    mono    := VAR [ '^' iexp ]
    iexp    := INT | '(' ['-'] INT ')' | '-' INT
    coeff   := RAT | '(' puiseux ')'
    puiseux := ['-'] pterm { ('+'|'-') pterm }
    pterm   := RAT [ '*' 't' [ '^' rexp ] ] | 't' [ '^' rexp ]
    rexp    := RAT | '(' ['-'] RAT ')'
    RAT     := INT [ '/' POSINT ]

Under a Puiseux valuation a bare ``t`` factor (``t^3``, ``3*t*x``) may also
appear among the monomials and multiplies the coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import (
    DimensionMismatch,
    ParseError,
    PuiseuxLiteralOutsideSpec,
    UnknownVariable,
    ZeroCoordinate,
    ZeroPolynomial,
)
from .tropical import Monomial, TropPoly, default_names, format_monomial, grlex_key
from .valuation import (
    INF,
    PuiseuxSeries,
    Scalar,
    ValuationSpec,
    coerce,
    is_zero,
    power,
    val,
)


def _exact_zero(c) -> bool:
    if isinstance(c, PuiseuxSeries):
        return c.is_zero() and c.is_exact()
    return c == 0


@dataclass(frozen=True)
class LaurentPoly:
    nvars: int
    spec: ValuationSpec
    terms: Mapping[Monomial, Scalar] = field(default_factory=dict)
    names: tuple = ()

    def __post_init__(self):
        names = tuple(self.names) or tuple(default_names(self.nvars))
        if len(names) != self.nvars:
            raise DimensionMismatch("need one name per variable")
        clean = {}
        for u, c in self.terms.items():
            u = tuple(int(e) for e in u)
            if len(u) != self.nvars:
                raise DimensionMismatch(f"monomial {u} has wrong length")
            c = coerce(c, self.spec)
            if not _exact_zero(c):
                clean[u] = c
        object.__setattr__(self, "names", names)
        object.__setattr__(
            self, "terms", dict(sorted(clean.items(), key=lambda kv: grlex_key(kv[0])))
        )

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list:
        return list(self.terms)

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        if (other.nvars, other.spec) != (self.nvars, self.spec):
            raise DimensionMismatch("polynomials live in different rings")
        acc = dict(self.terms)
        for u, c in other.terms.items():
            acc[u] = acc[u] + c if u in acc else c
        return LaurentPoly(self.nvars, self.spec, acc, self.names)

    def __neg__(self):
        return LaurentPoly(
            self.nvars, self.spec, {u: -c for u, c in self.terms.items()}, self.names
        )

    def __sub__(self, other):
        return self + (-other)

    def __str__(self):
        return to_string(self)


def _fmt_coeff(c) -> tuple:
    """Return (text, needs_parens) for a coefficient."""
    if isinstance(c, PuiseuxSeries):
        if len(c.terms) == 1 and c.terms[0][0] == 0 and c.is_exact():
            return str(c.terms[0][1]), False
        return "(" + str(c) + ")", True
    return str(c), False


def to_string(f: LaurentPoly) -> str:
    """Canonical text form; parses back to ``f`` when coefficients are exact."""
    if not f.terms:
        return "0"
    parts = []
    for u, c in f.terms.items():
        mono = format_monomial(u, f.names)
        text, paren = _fmt_coeff(c)
        if mono == "1":
            parts.append(text)
        elif not paren and text == "1":
            parts.append(mono)
        elif not paren and text == "-1":
            parts.append("-" + mono)
        else:
            parts.append(f"{text}*{mono}")
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


# -- parser ----------------------------------------------------------------

_PUNCT = set("+-*/^()")


def _tokenize(text: str):
    toks = []
    data = text.encode("utf-8")
    i = 0
    while i < len(data):
        ch = chr(data[i])
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(data) and chr(data[j]).isdigit():
                j += 1
            toks.append(("INT", data[i:j].decode(), i))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(data) and (chr(data[j]).isalnum() or chr(data[j]) == "_"):
                j += 1
            toks.append(("VAR", data[i:j].decode(), i))
            i = j
        elif ch in _PUNCT:
            toks.append((ch, ch, i))
            i += 1
        else:
            raise ParseError(i, ["number", "variable", "operator"], text)
    toks.append(("EOF", "", len(data)))
    return toks


class _Parser:
    def __init__(self, text, spec, names):
        self.text = text
        self.spec = spec
        self.names = list(names)
        self.index = {n: i for i, n in enumerate(self.names)}
        self.toks = _tokenize(text)
        self.pos = 0
        self.t_is_series = "t" not in self.index

    # token helpers
    def peek(self):
        return self.toks[self.pos]

    def accept(self, kind):
        if self.toks[self.pos][0] == kind:
            self.pos += 1
            return True
        return False

    def expect(self, kind, label=None):
        tok = self.toks[self.pos]
        if tok[0] != kind:
            raise ParseError(tok[2], [label or f"'{kind}'"], self.text)
        self.pos += 1
        return tok

    def fail(self, *expected):
        raise ParseError(self.peek()[2], expected, self.text)

    # grammar
    def poly(self):
        terms: dict = {}
        sign = -1 if self.accept("-") else 1
        while True:
            u, c = self.term()
            c = c if sign > 0 else -c
            terms[u] = terms[u] + c if u in terms else c
            if self.accept("+"):
                sign = 1
            elif self.accept("-"):
                sign = -1
            elif self.peek()[0] == "EOF":
                break
            else:
                self.fail("'+'", "'-'", "'*'", "end of input")
        return terms

    def rat(self):
        num = int(self.expect("INT", "integer")[1])
        if self.accept("/"):
            tok = self.expect("INT", "positive integer")
            den = int(tok[1])
            if den == 0:
                raise ParseError(tok[2], ["positive integer"], self.text)
            return Fraction(num, den)
        return Fraction(num)

    def rexp(self):
        if self.accept("("):
            neg = self.accept("-")
            r = self.rat()
            self.expect(")", "')'")
            return -r if neg else r
        if self.peek()[0] == "INT":
            return self.rat()
        self.fail("rational exponent", "'('")

    def iexp(self):
        if self.accept("("):
            neg = self.accept("-")
            k = int(self.expect("INT", "integer")[1])
            self.expect(")", "')'")
            return -k if neg else k
        if self.accept("-"):
            return -int(self.expect("INT", "integer")[1])
        if self.peek()[0] == "INT":
            return int(self.expect("INT")[1])
        self.fail("integer exponent", "'('")

    def tpower(self):
        """After a consumed 't': optional '^' rexp."""
        return self.rexp() if self.accept("^") else Fraction(1)

    def is_series_t(self, tok):
        return tok[0] == "VAR" and tok[1] == "t" and self.t_is_series

    def check_series_allowed(self, tok):
        if self.spec.kind != "puiseux":
            raise PuiseuxLiteralOutsideSpec(
                f"'t' at offset {tok[2]} needs a puiseux field, not {self.spec}"
            )

    def puiseux(self):
        pairs = []
        sign = -1 if self.accept("-") else 1
        while True:
            tok = self.peek()
            if tok[0] == "INT":
                c = self.rat()
                e = Fraction(0)
                if self.accept("*"):
                    ttok = self.peek()
                    if not self.is_series_t(ttok):
                        self.fail("'t'")
                    self.check_series_allowed(ttok)
                    self.pos += 1
                    e = self.tpower()
            elif self.is_series_t(tok):
                self.check_series_allowed(tok)
                self.pos += 1
                c, e = Fraction(1), self.tpower()
            else:
                self.fail("number", "'t'")
            pairs.append((e, sign * c))
            if self.accept("+"):
                sign = 1
            elif self.accept("-"):
                sign = -1
            else:
                break
        self.expect(")", "')'")
        if self.spec.kind == "puiseux":
            return PuiseuxSeries.from_terms(pairs)
        return sum((c for _, c in pairs), Fraction(0))

    def term(self):
        u = [0] * len(self.names)
        coeff = coerce(1, self.spec)
        tok = self.peek()
        need_factor = True
        if tok[0] == "INT":
            coeff = coerce(self.rat(), self.spec)
            need_factor = False
        elif self.accept("("):
            coeff = coerce(self.puiseux(), self.spec)
            need_factor = False
        elif tok[0] != "VAR":
            self.fail("number", "variable", "'('")
        if not need_factor and not self.accept("*"):
            return tuple(u), coeff
        while True:
            tok = self.peek()
            if tok[0] != "VAR":
                self.fail("variable")
            self.pos += 1
            if self.is_series_t(tok):
                self.check_series_allowed(tok)
                coeff = coeff * PuiseuxSeries.monomial(self.tpower())
            else:
                if tok[1] not in self.index:
                    raise UnknownVariable(
                        f"unknown variable {tok[1]!r} at offset {tok[2]}"
                        f" (declared: {', '.join(self.names)})"
                    )
                k = self.iexp() if self.accept("^") else 1
                u[self.index[tok[1]]] += k
            if not self.accept("*"):
                break
        return tuple(u), coeff


def parse_poly(text: str, spec: ValuationSpec, names: Sequence[str]) -> LaurentPoly:
    names = tuple(names)
    if spec.kind == "puiseux" and "t" in names:
        raise UnknownVariable("'t' is reserved for Puiseux series literals")
    if len(set(names)) != len(names) or not names:
        raise DimensionMismatch("variable names must be distinct and nonempty")
    terms = _Parser(text, spec, names).poly()
    return LaurentPoly(len(names), spec, terms, names)


def parse_scalar(text: str, spec: ValuationSpec) -> Scalar:
    """Parse a single coefficient literal such as ``-1/2`` or ``1 + t^(1/3)``."""
    f = parse_poly(text, spec, ("__scalar",))
    if any(u != (0,) for u in f.terms):
        raise ParseError(0, ["scalar literal"], text)
    return f.terms.get((0,), coerce(0, spec))


# -- operations ------------------------------------------------------------


def evaluate(f: LaurentPoly, point: Sequence) -> Scalar:
    """Value of ``f`` at a point of the torus."""
    if len(point) != f.nvars:
        raise DimensionMismatch(f"point has {len(point)} coordinates, need {f.nvars}")
    pt = [coerce(x, f.spec) for x in point]
    for i, x in enumerate(pt):
        if is_zero(x):
            raise ZeroCoordinate(f"coordinate {i} is zero")
    cache: dict = {}

    def pw(i, k):
        key = (i, k)
        if key not in cache:
            cache[key] = power(pt[i], k, f.spec)
        return cache[key]

    total = coerce(0, f.spec)
    for u, c in f.terms.items():
        term = c
        for i, k in enumerate(u):
            if k:
                term = term * pw(i, k)
        total = total + term
    return total


def tropicalize(f: LaurentPoly) -> TropPoly:
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial has no tropicalization")
    return TropPoly(f.nvars, {u: val(c, f.spec) for u, c in f.terms.items()})


def shift_monomial(f: LaurentPoly, u: Sequence[int]) -> LaurentPoly:
    """Multiply ``f`` by the monomial ``x^u``."""
    if len(u) != f.nvars:
        raise DimensionMismatch("shift vector has wrong length")
    terms = {tuple(a + b for a, b in zip(m, u)): c for m, c in f.terms.items()}
    return LaurentPoly(f.nvars, f.spec, terms, f.names)


__all__ = [
    "INF",
    "LaurentPoly",
    "evaluate",
    "parse_poly",
    "parse_scalar",
    "shift_monomial",
    "to_string",
    "tropicalize",
]
