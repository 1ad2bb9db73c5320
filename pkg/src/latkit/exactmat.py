"""Exact integer and rational matrix routines.

Matrices are plain lists of lists holding ``int`` or ``Fraction`` entries.
Nothing here ever rounds.
"""
from fractions import Fraction
from math import gcd


class SmithDecomposition:
    """U * A * V = S with U, V unimodular and S diagonal."""

    def __init__(self, S, U, V, divisors):
        self.S = S
        self.U = U
        self.V = V
        self.divisors = divisors

    def __repr__(self):
        return "SmithDecomposition(divisors=%r)" % (self.divisors,)


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(r, c):
    return [[0] * c for _ in range(r)]


def transpose(A):
    return [list(col) for col in zip(*A)]


def shape(A):
    return (len(A), len(A[0]) if A else 0)


def mat_mul(A, B):
    if not A:
        return []
    if not B:
        return [[] for _ in A]
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col) if a) for col in Bt] for row in A]


def vec_mat(v, A):
    """Row vector times matrix."""
    if not A:
        return []
    out = [0] * len(A[0])
    for x, row in zip(v, A):
        if x:
            for j, a in enumerate(row):
                if a:
                    out[j] += x * a
    return out


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def to_fractions(A):
    return [[Fraction(x) for x in row] for row in A]


def is_integer_matrix(A):
    return all(Fraction(x).denominator == 1 for row in A for x in row)


def as_int(A):
    """Convert an integral rational matrix to an int matrix."""
    out = []
    for row in A:
        r = []
        for x in row:
            x = Fraction(x)
            if x.denominator != 1:
                raise ValueError("matrix is not integral")
            r.append(x.numerator)
        out.append(r)
    return out


def common_denominator(A):
    d = 1
    for row in A:
        for x in row:
            q = Fraction(x).denominator
            d = d * q // gcd(d, q)
    return d


def clear_denominators(A):
    """Return (d, d*A) with d*A an int matrix and d the least such d."""
    d = common_denominator(A)
    return d, [[(Fraction(x) * d).numerator for x in row] for row in A]


def _xgcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def _row_combine(M, i, j, a, b, c, d):
    # (row i, row j) <- (a*Ri + b*Rj, c*Ri + d*Rj)
    ri, rj = M[i], M[j]
    M[i] = [a * x + b * y for x, y in zip(ri, rj)]
    M[j] = [c * x + d * y for x, y in zip(ri, rj)]


def _upper_hnf(A):
    """Row echelon HNF: pivots move right, positive, entries above reduced."""
    n, m = shape(A)
    H = [list(r) for r in A]
    U = identity(n)
    r = 0
    for c in range(m):
        if r == n:
            break
        for i in range(r + 1, n):
            b = H[i][c]
            if b == 0:
                continue
            a = H[r][c]
            if a == 0:
                H[r], H[i] = H[i], H[r]
                U[r], U[i] = U[i], U[r]
                continue
            g, x, y = _xgcd(a, b)
            _row_combine(H, r, i, x, y, -b // g, a // g)
            _row_combine(U, r, i, x, y, -b // g, a // g)
        p = H[r][c]
        if p == 0:
            continue
        if p < 0:
            H[r] = [-x for x in H[r]]
            U[r] = [-x for x in U[r]]
            p = -p
        for i in range(r):
            q = H[i][c] // p
            if q:
                H[i] = [x - q * y for x, y in zip(H[i], H[r])]
                U[i] = [x - q * y for x, y in zip(U[i], U[r])]
        r += 1
    return H, U, r


def hnf(A):
    """Row-style Hermite normal form.

    Returns (H, U) with H = U*A and U unimodular.  The nonzero rows of H come
    first; row i ends in its pivot, pivots move right going down, pivots are
    positive and the entries below each pivot lie in [0, pivot).  Zero rows
    fill the bottom.
    """
    n, m = shape(A)
    if n == 0:
        return [], []
    flipped = [list(reversed(row)) for row in A]
    H, U, r = _upper_hnf(flipped)
    order = list(range(r - 1, -1, -1)) + list(range(r, n))
    H = [list(reversed(H[i])) for i in order]
    U = [U[i] for i in order]
    return H, U


def hnf_rows(A):
    """Nonzero rows of the HNF of an int matrix."""
    H, _ = hnf(A)
    return [row for row in H if any(row)]


def rank(A):
    if not A:
        return 0
    d, M = clear_denominators(A)
    return len(hnf_rows(M))


def snf(A):
    """Smith normal form of an int matrix, with transforms."""
    n, m = shape(A)
    S = [list(r) for r in A]
    U = identity(n)
    V = identity(m)
    t = 0
    while t < min(n, m):
        # pick the smallest nonzero entry in the trailing block as pivot
        best = None
        for i in range(t, n):
            for j in range(t, m):
                x = S[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        _, i, j = best
        S[t], S[i] = S[i], S[t]
        U[t], U[i] = U[i], U[t]
        for row in S:
            row[t], row[j] = row[j], row[t]
        for row in V:
            row[t], row[j] = row[j], row[t]
        while True:
            done = True
            p = S[t][t]
            for i in range(t + 1, n):
                b = S[i][t]
                if b == 0:
                    continue
                if b % p == 0:
                    q = b // p
                    S[i] = [x - q * y for x, y in zip(S[i], S[t])]
                    U[i] = [x - q * y for x, y in zip(U[i], U[t])]
                else:
                    g, x, y = _xgcd(p, b)
                    _row_combine(S, t, i, x, y, -b // g, p // g)
                    _row_combine(U, t, i, x, y, -b // g, p // g)
                    p = S[t][t]
                    done = False
            for j in range(t + 1, m):
                b = S[t][j]
                if b == 0:
                    continue
                if b % p == 0:
                    q = b // p
                    for row in S:
                        row[j] -= q * row[t]
                    for row in V:
                        row[j] -= q * row[t]
                else:
                    g, x, y = _xgcd(p, b)
                    c, d = -b // g, p // g
                    for M in (S, V):
                        for row in M:
                            u, w = row[t], row[j]
                            row[t], row[j] = x * u + y * w, c * u + d * w
                    p = S[t][t]
                    done = False
            if not done:
                continue
            # divisibility: fold an offending row into the pivot row
            bad = None
            for i in range(t + 1, n):
                for j in range(t + 1, m):
                    if S[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            S[t] = [x + y for x, y in zip(S[t], S[bad])]
            U[t] = [x + y for x, y in zip(U[t], U[bad])]
        if S[t][t] < 0:
            S[t] = [-x for x in S[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    divisors = [S[i][i] for i in range(min(n, m)) if S[i][i]]
    return SmithDecomposition(S, U, V, divisors)


def smith_divisors(A):
    return snf(A).divisors


def det(A):
    """Exact determinant via fraction-free (Bareiss) elimination."""
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("det needs a square matrix")
    if n == 0:
        return Fraction(1)
    d, M = clear_denominators(A)
    M = [list(r) for r in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pk = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * pk - M[i][k] * M[k][j]) // prev
        prev = pk
    return Fraction(sign * M[n - 1][n - 1], d ** n)


def inverse(A):
    """Exact inverse over Q (Gauss-Jordan); raises on singular input."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(A)]
    for c in range(n):
        p = next((i for i in range(c, n) if M[i][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        M[c], M[p] = M[p], M[c]
        inv = 1 / M[c][c]
        M[c] = [x * inv for x in M[c]]
        for i in range(n):
            if i != c and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return [row[n:] for row in M]


def solve_rational(A, b):
    """Solve x*A = b over Q.  Returns one solution or None."""
    n, m = shape(A)
    if len(b) != m:
        raise ValueError("dimension mismatch: A is %dx%d, b has %d" % (n, m, len(b)))
    # rows of the augmented system are the columns of A
    rows = [[Fraction(A[i][j]) for i in range(n)] + [Fraction(b[j])] for j in range(m)]
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if any(rows[i][n] != 0 for i in range(r, m)):
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = rows[i][n]
    return x


def integer_kernel(A):
    """Basis of {x in Z^rows : x*A = 0}, saturated, in HNF."""
    n = len(A)
    if n == 0:
        return []
    if not A[0]:
        return identity(n)
    _, M = clear_denominators(A)
    H, U = hnf(M)
    ker = [U[i] for i in range(n) if not any(H[i])]
    return hnf_rows(ker) if ker else []
