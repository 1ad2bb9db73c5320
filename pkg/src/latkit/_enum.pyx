# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled Fincke-Pohst kernel.  Mirrors ``_enum_py.enumerate_half``."""
from libc.math cimport sqrt, ceil, floor
from libc.stdlib cimport malloc, free

cdef double MARGIN = 1e-7


def enumerate_half(q, mu, g, long long lo, long long hi, bint want_vectors):
    cdef int n = len(q)
    out = [] if want_vectors else {}
    if n == 0 or hi <= 0:
        return out
    cdef double bound = hi + MARGIN * (1 + abs(hi))
    cdef double flo = lo - MARGIN * (1 + abs(lo))
    cdef double tol = MARGIN * (1 + abs(bound))
    cdef double *Q = <double *> malloc(n * sizeof(double))
    cdef double *MU = <double *> malloc(n * n * sizeof(double))
    cdef long long *G = <long long *> malloc(n * n * sizeof(long long))
    cdef long long *x = <long long *> malloc(n * sizeof(long long))
    cdef long long *upper = <long long *> malloc(n * sizeof(long long))
    cdef double *c = <double *> malloc(n * sizeof(double))
    cdef double *rem = <double *> malloc((n + 1) * sizeof(double))
    cdef int *zero_above = <int *> malloc((n + 1) * sizeof(int))
    cdef int i, j, a, b
    cdef double s, r, t, rad
    cdef long long lo_x, nrm, acc
    try:
        for i in range(n):
            Q[i] = q[i]
            x[i] = 0
            for j in range(n):
                MU[i * n + j] = mu[i][j]
                G[i * n + j] = g[i][j]
        zero_above[n] = 1
        rem[n - 1] = bound
        i = n - 1
        # start(i)
        c[i] = 0.0
        rad = sqrt(rem[i] / Q[i]) if rem[i] > 0 else 0.0
        lo_x = <long long> ceil(-rad - 1e-9)
        upper[i] = <long long> floor(rad + 1e-9)
        zero_above[i] = 1
        if lo_x < 0:
            lo_x = 0
        x[i] = lo_x
        while True:
            if x[i] > upper[i]:
                i += 1
                if i == n:
                    break
                x[i] += 1
                continue
            t = x[i] - c[i]
            r = rem[i] - Q[i] * t * t
            if i == 0:
                if r >= -tol and bound - r >= flo:
                    nrm = 0
                    for a in range(n):
                        if x[a] != 0:
                            acc = 0
                            for b in range(n):
                                if x[b] != 0:
                                    acc += G[a * n + b] * x[b]
                            nrm += x[a] * acc
                    if nrm >= lo and nrm <= hi and nrm > 0:
                        if want_vectors:
                            out.append(tuple([x[a] for a in range(n)]))
                        else:
                            out[nrm] = out.get(nrm, 0) + 1
                x[0] += 1
                continue
            if r < -tol:
                x[i] += 1
                continue
            rem[i - 1] = r if r > 0 else 0.0
            i -= 1
            s = 0.0
            for j in range(i + 1, n):
                if x[j] != 0:
                    s -= MU[i * n + j] * x[j]
            c[i] = s
            rad = sqrt(rem[i] / Q[i]) if rem[i] > 0 else 0.0
            lo_x = <long long> ceil(s - rad - 1e-9)
            upper[i] = <long long> floor(s + rad + 1e-9)
            zero_above[i] = zero_above[i + 1] and x[i + 1] == 0
            if zero_above[i] and lo_x < 0:
                lo_x = 0
            x[i] = lo_x
    finally:
        free(Q)
        free(MU)
        free(G)
        free(x)
        free(upper)
        free(c)
        free(rem)
        free(zero_above)
    return out
