from fractions import Fraction

import pytest

from tropgeom.laurent import parse_poly
from tropgeom.valuation import ValuationSpec

TRIVIAL = ValuationSpec.trivial()
PADIC2 = ValuationSpec.padic(2)
PADIC3 = ValuationSpec.padic(3)
PUISEUX = ValuationSpec.puiseux()

_ACCEPTANCE_LINES = []


def poly(text, spec=TRIVIAL, names="x,y"):
    return parse_poly(text, spec, names.split(","))


def F(*xs):
    return tuple(Fraction(x) for x in xs)


@pytest.fixture
def acceptance_log():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
