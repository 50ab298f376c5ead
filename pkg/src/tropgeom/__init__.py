"""Tropicalization of Laurent polynomials and tropical plane curves."""

from .errors import TropicalError
from .initial import ResiduePoly, initial_form, is_monomial, member_via_initial
from .laurent import (
    LaurentPoly,
    evaluate,
    parse_poly,
    parse_scalar,
    shift_monomial,
    to_string,
    tropicalize,
)
from .planecurve import (
    check_balancing,
    check_connected_codim1,
    curve_contains,
    dual_curve,
    newton_polygon,
    regular_subdivision,
)
from .tropical import (
    TropPoly,
    argmin_terms,
    in_hypersurface,
    prevariety_member,
    trop_eval,
    univariate_roots,
)
from .valuation import INF, PuiseuxSeries, ValuationSpec, residue, split, val
from .verify import check_point, first_order_witness, line_case_analysis

__version__ = "0.1.0"
