"""Compare the compiled and pure-Python membership kernels.

    python benchmarks/bench_kernels.py [--points N] [--terms M] [--repeat R]

Reports the raw integer kernel time and the end-to-end time of
``batch_min_count`` (which includes rescaling to a common denominator).
"""

import argparse
import random
import timeit
from fractions import Fraction

from tropgeom import _kernels
from tropgeom._kernels import _pykernel, batch_min_count


def make_case(rng, n_terms, n_points):
    exps = [(rng.randint(-6, 6), rng.randint(-6, 6)) for _ in range(n_terms)]
    vals = [Fraction(rng.randint(-30, 30), rng.randint(1, 4)) for _ in range(n_terms)]
    points = [(Fraction(rng.randint(-60, 60), rng.randint(1, 6)),
               Fraction(rng.randint(-60, 60), rng.randint(1, 6))) for _ in range(n_points)]
    return exps, vals, points


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--points", type=int, default=20000)
    ap.add_argument("--terms", type=int, default=12)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    exps, vals, points = make_case(rng, args.terms, args.points)
    den, ivals, ipoints = _kernels._scale(vals, points)
    iexps = [list(u) for u in exps]

    print(f"terms={args.terms} points={args.points} backends={_kernels.available_backends()}")
    rows = [("python kernel", lambda: _pykernel.min_count(iexps, ivals, ipoints))]
    if "cython" in _kernels.available_backends():
        import numpy as np

        e = np.asarray(iexps, dtype=np.int64)
        v = np.asarray(ivals, dtype=np.int64)
        p = np.asarray(ipoints, dtype=np.int64)
        rows.append(("cython kernel", lambda: _kernels._ckernel.min_count(e, v, p)))
        ref = batch_min_count(exps, vals, points, "python")
        assert batch_min_count(exps, vals, points, "cython") == ref
    for backend in _kernels.available_backends():
        rows.append((f"{backend} end-to-end",
                     lambda b=backend: batch_min_count(exps, vals, points, b)))

    times = {}
    for label, fn in rows:
        times[label] = best(fn, args.repeat)
        print(f"{label:<22} {times[label] * 1e3:10.2f} ms")
    if "cython kernel" in times:
        print(f"kernel speedup: {times['python kernel'] / times['cython kernel']:.1f}x")
        print(f"end-to-end speedup: "
              f"{times['python end-to-end'] / times['cython end-to-end']:.1f}x")


if __name__ == "__main__":
    main()
