"""The twelve acceptance criteria, one test each.

Each test logs a ``[PASS] n: ...`` or ``[FAIL] n: ...`` line that the
terminal summary prints in order.
"""

import contextlib
import random
from fractions import Fraction
from math import gcd

from conftest import PADIC2, PADIC3, PUISEUX, TRIVIAL, poly
from tropgeom import corpus
from tropgeom.initial import initial_form, member_via_initial
from tropgeom.laurent import tropicalize
from tropgeom.planecurve import (
    check_balancing,
    check_connected_codim1,
    curve_contains,
    dual_curve,
)
from tropgeom.tropical import (
    TropPoly,
    in_hypersurface_many,
    parse_min_poly,
    prevariety_member,
    univariate_roots,
)
from tropgeom.valuation import PuiseuxSeries, val
from tropgeom.verify import ZeroState, check_point, line_case_analysis


@contextlib.contextmanager
def criterion(log, number, title):
    try:
        yield
    except BaseException:
        log.append(f"[FAIL] {number}: {title}")
        raise
    log.append(f"[PASS] {number}: {title}")


def rand_rat(rng, lo=-20, hi=20, den=6):
    return Fraction(rng.randint(lo * den, hi * den), rng.randint(1, den))


def points_on_curve(C, rng, k, integral=False):
    """Rational points on random cells of C (only lattice points if ``integral``)."""
    cells = [("e", e) for e in C.edges] + [("r", r) for r in C.rays]
    out = []
    tries = 0
    while len(out) < k and tries < 50 * k:
        tries += 1
        kind, cell = rng.choice(cells)
        if kind == "e":
            a, b = (C.vertices[i] for i in cell.endpoints)
            lam = Fraction(rng.randint(0, 12), 12)
            p = (a[0] + lam * (b[0] - a[0]), a[1] + lam * (b[1] - a[1]))
        else:
            a = C.vertices[cell.base]
            lam = Fraction(rng.randint(0, 40), rng.choice([1, 2, 3, 4]))
            p = (a[0] + lam * cell.direction[0], a[1] + lam * cell.direction[1])
        if integral and any(Fraction(x).denominator != 1 for x in p):
            continue
        out.append(p)
    return out


def test_criterion_01_univariate_roots(acceptance_log):
    with criterion(acceptance_log, 1, "univariate roots of min(3x-2, 2x-1, x+1, 5) are 1, 2, 4"):
        F = parse_min_poly("min-poly: -2,x^3; -1,x^2; 1,x; 5,1", ["x"])
        assert univariate_roots(F) == [(1, 1), (2, 1), (4, 1)]
        assert all(isinstance(r, Fraction) for r, _ in univariate_roots(F))


def test_criterion_02_quadratic_formula(acceptance_log):
    with criterion(acceptance_log, 2, "tropical quadratic formula on 100 random (a, b, c)"):
        rng = random.Random(2002)
        regimes = {"two": 0, "double": 0, "tie": 0}
        for k in range(100):
            a, b, c = rand_rat(rng), rand_rat(rng), rand_rat(rng)
            if k % 10 == 0:
                b = (a + c) / 2
            F = TropPoly(1, {(2,): a, (1,): b, (0,): c})
            roots = univariate_roots(F)
            if 2 * b < a + c:
                regimes["two"] += 1
                assert roots == sorted([(b - a, 1), (c - b, 1)])
            else:
                regimes["tie" if 2 * b == a + c else "double"] += 1
                assert roots == [((c - a) / 2, 2)]
            if 2 * b == a + c:
                assert c - b == b - a == (c - a) / 2
        assert all(regimes.values())


def test_criterion_03_valuation_table(acceptance_log):
    with criterion(acceptance_log, 3, "valuation table val2(8), val3(5/6), Puiseux leading exponent"):
        assert val(8, PADIC2) == 3
        assert val(Fraction(5, 6), PADIC3) == -1
        s = PuiseuxSeries.from_terms([(Fraction(-1, 2), 3), (2, 8), (Fraction(13, 3), 7)])
        assert val(s, PUISEUX) == Fraction(-1, 2)


def test_criterion_04_tropicalization(acceptance_log):
    with criterion(acceptance_log, 4, "2-adic tropicalization min(2x+1, x+y, 2y+1, x, y, 2)"):
        F = tropicalize(poly("6*x^2+5*x*y+10*y^2+3*x-y+4", PADIC2))
        assert F == parse_min_poly("1,x^2; 0,x*y; 1,y^2; 0,x; 0,y; 2,1", ["x", "y"])
        assert list(F.terms.values()) == [1, 0, 1, 0, 0, 2]


def test_criterion_05_initial_forms(acceptance_log):
    with criterion(acceptance_log, 5, "initial forms x+y+1 over Z/2 and x^2+xy"):
        f = poly("2*x^2+x*y+6*y^2+5*x-3*y+4", PADIC2)
        g = initial_form(f, (2, 2))
        assert g.terms == {(1, 0): 1, (0, 1): 1, (0, 0): 1} and g.modulus == 2
        h = initial_form(f, (-2, -1))
        assert h.terms == {(2, 0): 1, (1, 1): 1}


def test_criterion_06_balancing(acceptance_log):
    with criterion(acceptance_log, 6, "balancing with weights 3,3,1,1 and 2,2,1,1,1"):
        C = dual_curve(tropicalize(poly("x^2*y^2+x^3+y^3+1")))
        assert sorted((r.direction, r.weight) for r in C.rays) == sorted(
            [((1, 0), 3), ((0, 1), 3), ((-2, -1), 1), ((-1, -2), 1)])
        report = check_balancing(C)
        assert report.passed and [v.total for v in report.vertices] == [(0, 0)]

        D = dual_curve(tropicalize(poly("x^2+3*x+2+x^2*y+2*x*y^2-2*y^2")))
        assert D.vertices == ((0, 0),) and not D.edges
        assert sorted((r.direction, r.weight) for r in D.rays) == sorted(
            [((1, 0), 2), ((0, 1), 2), ((-1, 0), 1), ((-1, -1), 1), ((0, -1), 1)])
        report = check_balancing(D)
        assert report.passed and [v.total for v in report.vertices] == [(0, 0)]


def test_criterion_07_fundamental_spot_check(acceptance_log):
    with criterion(acceptance_log, 7, "2-adic zero (2,2) has valuation (1,1) on the curve"):
        f = poly("4*x^2+x*y-4*y^2+x-y-4", PADIC2)
        pc = check_point(f, (2, 2))
        assert pc.value == 0 and pc.is_zero is ZeroState.EXACT
        assert pc.val_vector == (1, 1) and pc.in_trop
        assert curve_contains(dual_curve(tropicalize(f)), (1, 1))


def test_criterion_08_line_cases(acceptance_log):
    with criterion(acceptance_log, 8, "line case analysis on 50 random points of the tropical line"):
        rng = random.Random(808)
        f = poly("x+y+1", PUISEUX)
        assert PUISEUX.precision >= 10
        branches = set()
        for k in range(50):
            lam = Fraction(rng.randint(1, 60), rng.randint(1, 7))
            kind = k % 4
            w = [(lam, 0), (0, lam), (-lam, -lam), (0, 0)][kind]
            branches.add(kind)
            point = line_case_analysis(w)
            assert point is not None
            pc = check_point(f, point)
            assert pc.is_zero is ZeroState.EXACT
            assert pc.val_vector == tuple(Fraction(x) for x in w)
        assert branches == {0, 1, 2, 3}


def test_criterion_09_oracle_equivalence(acceptance_log):
    with criterion(acceptance_log, 9, "initial-form oracle = hypersurface oracle, corpus x 500 w"):
        disagreements = 0
        on_curve = 0
        for name, f in corpus.all_examples().items():
            rng = random.Random("ac9" + name)
            F = tropicalize(f)
            C = dual_curve(F)
            if f.spec.kind == "padic":
                ws = [(i, j) for i in range(-7, 8) for j in range(-7, 8)]
                ws += points_on_curve(C, rng, 100, integral=True)
                ws += [(rng.randint(-40, 40), rng.randint(-40, 40))
                       for _ in range(500 - len(ws))]
            else:
                ws = points_on_curve(C, rng, 200) + [tuple(C.vertices[0])]
                ws += [(rand_rat(rng), rand_rat(rng)) for _ in range(500 - len(ws))]
            assert len(ws) == 500
            fast = in_hypersurface_many(F, ws)
            on_curve += sum(fast)
            disagreements += sum(member_via_initial(f, w) != m for w, m in zip(ws, fast))
        assert disagreements == 0
        assert on_curve > 1000  # both answers are exercised


def test_criterion_10_duality(acceptance_log):
    with criterion(acceptance_log, 10, "membership oracle = point location, corpus x 200 points"):
        disagreements = 0
        hits = 0
        for name, f in corpus.all_examples().items():
            rng = random.Random("ac10" + name)
            F = tropicalize(f)
            C = dual_curve(F)
            ws = points_on_curve(C, rng, 80)
            ws += [(v[0] + rand_rat(rng, -1, 1, 8), v[1] + rand_rat(rng, -1, 1, 8))
                   for v in C.vertices for _ in range(40 // len(C.vertices) + 1)]
            ws = ws[:120]
            ws += [(rand_rat(rng), rand_rat(rng)) for _ in range(200 - len(ws))]
            assert len(ws) == 200
            member = in_hypersurface_many(F, ws)
            hits += sum(member)
            disagreements += sum(curve_contains(C, w) != m for w, m in zip(ws, member))
        assert disagreements == 0
        assert hits > 500


def _lattice_length_by_count(a, b):
    n = 0
    for x in range(min(a[0], b[0]), max(a[0], b[0]) + 1):
        for y in range(min(a[1], b[1]), max(a[1], b[1]) + 1):
            if (b[0] - a[0]) * (y - a[1]) - (b[1] - a[1]) * (x - a[0]) == 0:
                n += 1
    return n - 1


def test_criterion_11_structure_properties(acceptance_log):
    with criterion(acceptance_log, 11, "100 random 2-adic curves balanced, connected, weights = lattice lengths"):
        rng = random.Random(1111)
        failures = 0
        for _ in range(100):
            f = corpus.random_padic_curve(rng)
            assert len(f.terms) <= 12
            assert all(max(abs(u[0]), abs(u[1])) <= 3 for u in f.terms)
            C = dual_curve(tropicalize(f))
            ok = check_balancing(C).passed and check_connected_codim1(C)
            for cell in list(C.edges) + list(C.rays):
                a, b = cell.dual
                ok &= cell.weight == _lattice_length_by_count(a, b)
                d = cell.direction
                ok &= gcd(*d) == 1
            failures += not ok
        assert failures == 0


def test_criterion_12_prevariety(acceptance_log):
    with criterion(acceptance_log, 12, "prevariety contains (1,1,0,0) and the line (1,0,0,0)+R(1,1,1,1)"):
        names = "x,y,z,w"
        Fs = [tropicalize(poly("x+y+z+w", TRIVIAL, names)),
              tropicalize(poly("x+2*y+5*z+11*w", TRIVIAL, names))]
        assert prevariety_member(Fs, (1, 1, 0, 0))
        rng = random.Random(12)
        lams = [Fraction(0), Fraction(1), Fraction(-3, 2)]
        lams += [rand_rat(rng, -50, 50, 9) for _ in range(47)]
        for lam in lams:
            assert prevariety_member(Fs, (1 + lam, lam, lam, lam))
        # control: a point off the first hyperplane
        assert not prevariety_member(Fs, (1, 2, 3, 4))
