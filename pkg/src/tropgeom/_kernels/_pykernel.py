"""Pure-Python twin of ``_ckernel``; also used when values exceed int64."""


def min_count(exps, vals, points):
    if not exps:
        raise ValueError("empty tropical polynomial")
    mins = []
    counts = []
    rows = list(zip(vals, exps))
    for q in points:
        best = None
        c = 0
        for v, u in rows:
            s = v + sum(a * b for a, b in zip(u, q))
            if best is None or s < best:
                best = s
                c = 1
            elif s == best:
                c += 1
        mins.append(best)
        counts.append(c)
    return mins, counts
