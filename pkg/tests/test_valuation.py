from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import PADIC2, PADIC3, PUISEUX, TRIVIAL
from tropgeom.errors import NegativeValuation, NotInValueGroup, PrecisionExhausted
from tropgeom.valuation import (
    INF,
    PuiseuxSeries,
    ValuationSpec,
    pui_add,
    pui_mul,
    pui_neg,
    residue,
    split,
    val,
)

T = PuiseuxSeries.monomial
nonzero_rats = st.fractions(max_denominator=50).filter(lambda x: x != 0).filter(
    lambda x: abs(x.numerator) < 10**6
)
specs = st.sampled_from([TRIVIAL, PADIC2, PADIC3, ValuationSpec.padic(5)])


def series(pairs, precision=INF):
    return PuiseuxSeries.from_terms(pairs, precision)


small_series = st.lists(
    st.tuples(st.fractions(-5, 5, max_denominator=4), st.integers(-5, 5)), max_size=4
).map(lambda ps: series(ps))


class TestVal:
    def test_reference_values(self):
        assert val(8, PADIC2) == 3
        assert val(Fraction(5, 6), PADIC3) == -1
        s = series([(Fraction(-1, 2), 3), (2, 8), (Fraction(13, 3), 7)])
        assert val(s, PUISEUX) == Fraction(-1, 2)
        assert val(7, TRIVIAL) == 0

    @pytest.mark.parametrize("spec", [TRIVIAL, PADIC2, PUISEUX])
    def test_zero_is_infinite(self, spec):
        assert val(0, spec) == INF

    def test_unknown_zero_raises(self):
        with pytest.raises(PrecisionExhausted):
            val(series([], 3), PUISEUX)

    @given(nonzero_rats, nonzero_rats, specs)
    def test_multiplicative(self, a, b, spec):
        assert val(a * b, spec) == val(a, spec) + val(b, spec)

    @given(nonzero_rats, nonzero_rats, specs)
    def test_ultrametric(self, a, b, spec):
        assume(a + b != 0)
        va, vb = val(a, spec), val(b, spec)
        assert val(a + b, spec) >= min(va, vb)
        if va != vb:
            assert val(a + b, spec) == min(va, vb)

    @given(small_series, small_series)
    def test_puiseux_valuation_laws(self, a, b):
        assume(a.terms and b.terms)
        assert val(a * b, PUISEUX) == val(a, PUISEUX) + val(b, PUISEUX)
        s = a + b
        if s.terms:
            assert val(s, PUISEUX) >= min(val(a, PUISEUX), val(b, PUISEUX))


class TestSplit:
    def test_examples(self):
        assert split(3, PADIC2) == 8
        assert split(Fraction(-1, 2), PUISEUX) == T(Fraction(-1, 2))
        assert split(0, TRIVIAL) == 1

    def test_outside_value_group(self):
        with pytest.raises(NotInValueGroup):
            split(Fraction(1, 2), PADIC2)
        with pytest.raises(NotInValueGroup):
            split(1, TRIVIAL)

    @given(st.integers(-20, 20), st.fractions(-20, 20, max_denominator=12))
    def test_section(self, k, q):
        assert val(split(k, PADIC3), PADIC3) == k
        assert val(split(q, PUISEUX), PUISEUX) == q


class TestResidue:
    def test_examples(self):
        assert residue(5, PADIC2) == 1
        assert residue(Fraction(4, 4), PADIC2) == 1
        assert residue(Fraction(-3), PADIC2) == 1
        assert residue(2 + T(1), PUISEUX) == 2
        assert residue(Fraction(7, 3), TRIVIAL) == Fraction(7, 3)

    def test_negative_valuation(self):
        with pytest.raises(NegativeValuation):
            residue(Fraction(1, 2), PADIC2)
        with pytest.raises(NegativeValuation):
            residue(T(-1), PUISEUX)

    def test_absent_constant_term(self):
        assert residue(T(1), PUISEUX) == 0

    @given(nonzero_rats, nonzero_rats, st.sampled_from([2, 3, 5, 7]))
    def test_multiplicative_on_units(self, a, b, p):
        spec = ValuationSpec.padic(p)
        assume(val(a, spec) == 0 and val(b, spec) == 0)
        assert residue(a * b, spec) == residue(a, spec) * residue(b, spec) % p


class TestPuiseuxArithmetic:
    def test_leading_cancellation(self):
        half = Fraction(1, 2)
        assert pui_add(T(half), -T(half) + T(1)) == T(1)

    def test_exponent_addition(self):
        assert pui_mul(T(-1), T(2)) == T(1)

    def test_truncated_product(self):
        a = series([(0, 1), (1, 1)], 2)
        b = series([(0, 1), (1, -1)], 2)
        assert pui_mul(a, b) == series([(0, 1)], 2)

    def test_negation(self):
        assert pui_neg(series([(0, 1)], 3)) == series([(0, -1)], 3)

    def test_inverse_geometric(self):
        inv = series([(0, 1), (1, 1)]).inverse(5)
        assert inv == series([(k, (-1) ** k) for k in range(5)], 5)
        assert inv * series([(0, 1), (1, 1)]) == series([(0, 1)], 5)

    def test_inverse_of_monomial_is_exact(self):
        assert T(Fraction(2, 3), 4).inverse() == T(Fraction(-2, 3), Fraction(1, 4))

    def test_power(self):
        assert (1 + T(1)) ** 2 == series([(0, 1), (1, 2), (2, 1)])
        assert T(Fraction(1, 2)) ** -2 == T(-1)

    def test_str(self):
        s = series([(Fraction(-1, 2), 3), (2, 8), (Fraction(13, 3), -7)], 10)
        assert str(s) == "3*t^(-1/2) + 8*t^2 - 7*t^(13/3) + O(t^10)"

    @given(small_series, small_series, small_series)
    def test_ring_laws(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c

    @given(small_series, small_series)
    def test_truncated_distributivity_on_overlap(self, a, b):
        a3, b2 = a.truncate(3), b.truncate(2)
        c = series([(0, 1), (1, 1)], 4)
        lhs = a3 * (b2 + c)
        rhs = a3 * b2 + a3 * c
        prec = min(lhs.precision, rhs.precision)
        assert lhs.truncate(prec) == rhs.truncate(prec)


class TestSpecParsing:
    def test_forms(self):
        assert ValuationSpec.parse("trivial") == TRIVIAL
        assert ValuationSpec.parse("padic:2") == PADIC2
        assert ValuationSpec.parse("puiseux").precision == 10
        assert ValuationSpec.parse("puiseux:7/2").precision == Fraction(7, 2)

    @pytest.mark.parametrize("bad", ["padic:4", "padic:1", "padic", "cheese", "puiseux:-1"])
    def test_rejects(self, bad):
        with pytest.raises(ValueError):
            ValuationSpec.parse(bad)
