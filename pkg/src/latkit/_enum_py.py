"""Pure-Python Fincke-Pohst kernel.  Same algorithm as ``_enum.pyx``.

Inputs come from :mod:`latkit.shortvec`: ``q`` and ``mu`` describe the
quadratic form as sum_i q[i] * (x[i] + sum_{j>i} mu[i][j] x[j])**2 in
floating point, ``g`` is the same form as an exact int matrix.  Only the
half of the vectors whose last nonzero coordinate is positive is visited.
"""
from math import ceil, floor, sqrt

MARGIN = 1e-7


def enumerate_half(q, mu, g, lo, hi, want_vectors):
    """Visit nonzero x with lo <= x g x^T <= hi (exact), one of each +-pair.

    Returns a list of tuples when ``want_vectors`` is true, otherwise a dict
    mapping exact norm -> count.
    """
    n = len(q)
    out = [] if want_vectors else {}
    if n == 0 or hi <= 0:
        return out
    bound = hi + MARGIN * (1 + abs(hi))
    flo = lo - MARGIN * (1 + abs(lo))
    tol = MARGIN * (1 + abs(bound))
    x = [0] * n
    c = [0.0] * n
    rem = [0.0] * (n + 1)
    upper = [0] * n
    zero_above = [True] * (n + 1)
    rem[n - 1] = bound
    i = n - 1

    def start(i):
        s = 0.0
        for j in range(i + 1, n):
            if x[j]:
                s -= mu[i][j] * x[j]
        c[i] = s
        r = rem[i]
        rad = sqrt(r / q[i]) if r > 0 else 0.0
        a = ceil(s - rad - 1e-9)
        b = floor(s + rad + 1e-9)
        zero_above[i] = zero_above[i + 1] and (i == n - 1 or x[i + 1] == 0)
        if zero_above[i] and a < 0:
            a = 0
        x[i] = a
        upper[i] = b

    zero_above[n] = True
    start(n - 1)
    while True:
        if x[i] > upper[i]:
            i += 1
            if i == n:
                break
            x[i] += 1
            continue
        t = x[i] - c[i]
        r = rem[i] - q[i] * t * t
        if i == 0:
            if r >= -tol and bound - r >= flo:
                nrm = 0
                for a in range(n):
                    xa = x[a]
                    if xa:
                        row = g[a]
                        s = 0
                        for b in range(n):
                            if x[b]:
                                s += row[b] * x[b]
                        nrm += xa * s
                if lo <= nrm <= hi and nrm > 0:
                    if want_vectors:
                        out.append(tuple(x))
                    else:
                        out[nrm] = out.get(nrm, 0) + 1
            x[0] += 1
            continue
        if r < -tol:
            x[i] += 1
            continue
        rem[i - 1] = r if r > 0 else 0.0
        i -= 1
        start(i)
    return out
