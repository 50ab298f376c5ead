# cython: language_level=3
"""Compiled min-plus evaluation over many points (int64, pre-scaled)."""

import numpy as np


def min_count(const long long[:, ::1] exps, const long long[::1] vals,
              const long long[:, ::1] points):
    """For each point q return min_i(vals[i] + exps[i] . q) and how many
    terms attain it. Callers guarantee that no partial sum overflows."""
    cdef Py_ssize_t m = exps.shape[0]
    cdef Py_ssize_t n = exps.shape[1]
    cdef Py_ssize_t k = points.shape[0]
    out_min = np.empty(k, dtype=np.int64)
    out_cnt = np.empty(k, dtype=np.int64)
    cdef long long[::1] mn = out_min
    cdef long long[::1] cnt = out_cnt
    cdef long long best, s, c
    cdef Py_ssize_t i, j, q
    if m == 0:
        raise ValueError("empty tropical polynomial")
    with nogil:
        for q in range(k):
            best = 0
            c = 0
            for i in range(m):
                s = vals[i]
                for j in range(n):
                    s += exps[i, j] * points[q, j]
                if c == 0 or s < best:
                    best = s
                    c = 1
                elif s == best:
                    c += 1
            mn[q] = best
            cnt[q] = c
    return out_min, out_cnt
