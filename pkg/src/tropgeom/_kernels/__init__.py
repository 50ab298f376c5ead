"""Hot loop of the membership oracles: evaluate a tropical polynomial at
many rational points and count how many terms attain the minimum.

Rationals are scaled to a common denominator so both backends run on
integers and stay exact. The compiled backend is used when it imported and
the scaled values fit comfortably in int64; otherwise the pure-Python one.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import _pykernel

try:
    from . import _ckernel
except ImportError:  # extension not built
    _ckernel = None

BACKEND = "cython" if _ckernel is not None else "python"
_INT64_BUDGET = 2**62


def available_backends():
    return ("cython", "python") if _ckernel is not None else ("python",)


def _scale(vals, points):
    dens = [v.denominator for v in vals]
    dens.extend(x.denominator for q in points for x in q)
    den = math.lcm(*set(dens)) if dens else 1
    return (
        den,
        [v.numerator * (den // v.denominator) for v in vals],
        [[x.numerator * (den // x.denominator) for x in q] for q in points],
    )


def _fits(exps, vals, points):
    if not points:
        return True
    n = len(exps[0])
    emax = max((abs(e) for u in exps for e in u), default=0)
    vmax = max((abs(v) for v in vals), default=0)
    pmax = max((abs(x) for q in points for x in q), default=0)
    return vmax + n * emax * pmax < _INT64_BUDGET


def batch_min_count(exps, vals, points, backend: str | None = None):
    """Return ``(mins, counts)`` for each point.

    ``exps`` is a list of integer exponent tuples, ``vals`` the matching
    Fractions, ``points`` a list of Fraction tuples.
    """
    backend = backend or BACKEND
    if backend not in available_backends():
        raise ValueError(f"backend {backend!r} not available")
    vals = [v if type(v) is Fraction else Fraction(v) for v in vals]
    points = [tuple(x if type(x) is Fraction else Fraction(x) for x in q) for q in points]
    den, ivals, ipoints = _scale(vals, points)
    iexps = [list(map(int, u)) for u in exps]
    if backend == "cython" and _fits(iexps, ivals, ipoints):
        import numpy as np

        n = len(iexps[0]) if iexps else 0
        mins, counts = _ckernel.min_count(
            np.asarray(iexps, dtype=np.int64).reshape(len(iexps), n),
            np.asarray(ivals, dtype=np.int64),
            np.asarray(ipoints, dtype=np.int64).reshape(len(ipoints), n),
        )
        mins, counts = mins.tolist(), counts.tolist()
    else:
        mins, counts = _pykernel.min_count(iexps, ivals, ipoints)
    return [Fraction(m, den) for m in mins], counts
