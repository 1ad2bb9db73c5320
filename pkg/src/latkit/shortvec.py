"""Short vectors: LLL reduction, Fincke-Pohst enumeration, Hermite bounds."""
import os
from fractions import Fraction
from math import floor

from . import exactmat as em
from .lattice import Lattice

if os.environ.get("LATKIT_PURE"):
    from . import _enum_py as _kernel
    BACKEND = "python"
else:
    try:
        from . import _enum as _kernel
        BACKEND = "cython"
    except ImportError:  # extension not built
        from . import _enum_py as _kernel
        BACKEND = "python"

from . import _enum_py as _pure_kernel


class NormSlice:
    """All vectors of one norm, in coordinates of the lattice's own basis."""

    def __init__(self, norm, vectors):
        self.norm = Fraction(norm)
        self.vectors = vectors

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __repr__(self):
        return "NormSlice(norm=%s, count=%d)" % (self.norm, len(self.vectors))


def lll_gram(G, delta=Fraction(3, 4)):
    """Exact LLL on a Gram matrix.  Returns (T, G') with G' = T G T^T."""
    n = len(G)
    G = [[Fraction(x) for x in row] for row in G]
    T = em.identity(n)
    if n <= 1:
        return T, G
    mu = [[Fraction(0)] * n for _ in range(n)]
    B = [Fraction(0)] * n
    B[0] = G[0][0]
    half = Fraction(1, 2)

    def red(k, l):
        if abs(mu[k][l]) > half:
            q = floor(mu[k][l] + half)
            T[k] = [a - q * b for a, b in zip(T[k], T[l])]
            G[k] = [a - q * b for a, b in zip(G[k], G[l])]
            G[k][k] -= q * G[k][l]
            for j in range(n):
                G[j][k] = G[k][j]
            mu[k][l] -= q
            for i in range(l):
                mu[k][i] -= q * mu[l][i]

    def swap(k):
        T[k], T[k - 1] = T[k - 1], T[k]
        G[k], G[k - 1] = G[k - 1], G[k]
        for row in G:
            row[k], row[k - 1] = row[k - 1], row[k]
        for j in range(k - 1):
            mu[k][j], mu[k - 1][j] = mu[k - 1][j], mu[k][j]
        m = mu[k][k - 1]
        b = B[k] + m * m * B[k - 1]
        mu[k][k - 1] = m * B[k - 1] / b
        B[k] = B[k - 1] * B[k] / b
        B[k - 1] = b
        for i in range(k + 1, kmax + 1):
            t = mu[i][k]
            mu[i][k] = mu[i][k - 1] - m * t
            mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k]

    k, kmax = 1, 0
    while k < n:
        if k > kmax:
            kmax = k
            for j in range(k):
                mu[k][j] = (G[k][j] - sum(mu[j][i] * mu[k][i] * B[i] for i in range(j))) / B[j]
            B[k] = G[k][k] - sum(mu[k][j] * mu[k][j] * B[j] for j in range(k))
        red(k, k - 1)
        if B[k] < (delta - mu[k][k - 1] ** 2) * B[k - 1]:
            swap(k)
            k = max(1, k - 1)
        else:
            for l in range(k - 2, -1, -1):
                red(k, l)
            k += 1
    return T, G


def lll_reduce(L):
    """Same lattice with an LLL-reduced basis (delta = 3/4)."""
    if L.rank == 0:
        return L
    T, _ = lll_gram(L.gram())
    return L.with_basis(em.mat_mul(T, L.basis))


def _cholesky(G):
    """Exact Q with G = U^T diag(q) U, U unit upper triangular."""
    n = len(G)
    Q = [[Fraction(x) for x in row] for row in G]
    for i in range(n):
        for j in range(i + 1, n):
            Q[j][i] = Q[i][j]
            Q[i][j] = Q[i][j] / Q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                Q[k][l] -= Q[k][i] * Q[i][l]
    q = [Q[i][i] for i in range(n)]
    mu = [[Q[i][j] if j > i else Fraction(0) for j in range(n)] for i in range(n)]
    return q, mu


class _Prepared:
    """LLL basis plus float data for the kernel, cached per lattice."""

    def __init__(self, L):
        G = L.gram()
        self.T, Gred = lll_gram(G)
        self.scale, gint = em.clear_denominators(Gred)
        self.gint = gint
        q, mu = _cholesky(gint)
        self.q = [float(x) for x in q]
        self.mu = [[float(x) for x in row] for row in mu]
        self.first_norm = Gred[0][0]
        # int64 safety for the compiled kernel
        big = max(abs(x) for row in gint for x in row)
        self.small = big < 2 ** 24


def _prepare(L):
    p = L.__dict__.get("_shortvec_prep")
    if p is None:
        p = _Prepared(L)
        L.__dict__["_shortvec_prep"] = p
    return p


def _run(L, lo, hi, want_vectors, kernel=None):
    """Kernel call on exact norm range [lo, hi]; returns data in LLL coords."""
    p = _prepare(L)
    slo = Fraction(lo) * p.scale
    shi = Fraction(hi) * p.scale
    ilo = -(-slo.numerator // slo.denominator)
    ihi = shi.numerator // shi.denominator
    if kernel is None:
        kernel = _kernel if (p.small and ihi < 2 ** 40) else _pure_kernel
    return p, kernel.enumerate_half(p.q, p.mu, p.gint, ilo, ihi, want_vectors)


def vectors_of_norm(L, n, kernel=None):
    """Every vector of exact norm n, both signs, sorted, in L's basis coords."""
    n = Fraction(n)
    if n < 0:
        raise ValueError("norm must be nonnegative")
    if L.rank == 0 or n == 0:
        return NormSlice(n, [tuple([0] * L.rank)] if n == 0 else [])
    p, half = _run(L, n, n, True, kernel)
    vecs = []
    for x in half:
        v = tuple(em.vec_mat(x, p.T))
        vecs.append(v)
        vecs.append(tuple(-a for a in v))
    vecs.sort()
    return NormSlice(n, vecs)


def vectors_up_to(L, n):
    """Nonzero vectors of norm <= n as (norm, coords) pairs, both signs."""
    if L.rank == 0:
        return []
    p, half = _run(L, 0, n, True)
    out = []
    for x in half:
        v = em.vec_mat(x, p.T)
        nrm = Fraction(em.dot(em.vec_mat(x, p.gint), x), p.scale)
        out.append((nrm, tuple(v)))
        out.append((nrm, tuple(-a for a in v)))
    out.sort()
    return out


def norm_counts(L, up_to):
    """{norm: count} for nonzero vectors of norm <= up_to, both signs."""
    if L.rank == 0:
        return {}
    p, hist = _run(L, 0, up_to, False)
    return {Fraction(k, p.scale): 2 * v for k, v in sorted(hist.items())}


def count_norm(L, n):
    if L.rank == 0:
        return 0
    p, hist = _run(L, n, n, False)
    return 2 * sum(hist.values())


def min_norm(L):
    if L.rank == 0:
        raise ValueError("rank-0 lattice has no minimum")
    p = _prepare(L)
    counts = norm_counts(L, p.first_norm)
    return min(counts)


def kissing_number(L):
    return count_norm(L, min_norm(L))


def is_rootless(L):
    if not L.is_integral():
        raise ValueError("rootlessness is defined for integral lattices")
    return L.rank == 0 or count_norm(L, 2) == 0


def hermite(n, d):
    """(4/3)^((n-1)/2) * d^(1/n)."""
    if n < 1 or d <= 0:
        raise ValueError("need n >= 1 and d > 0")
    return (4.0 / 3.0) ** ((n - 1) / 2.0) * float(d) ** (1.0 / n)


def hermite_guarantee(L):
    """The Hermite bound for L; min_norm(L) never exceeds it."""
    return hermite(L.rank, L.determinant())


def satisfies_hermite(L):
    # compare min^(2n) with (4/3)^(n(n-1)) d^2 exactly
    n = L.rank
    m = min_norm(L)
    return m ** (2 * n) <= Fraction(4, 3) ** (n * (n - 1)) * L.determinant() ** 2


def brute_force_norms(L, box=6):
    """Reference oracle: all coefficient vectors with |c_i| <= box."""
    from itertools import product
    d, G = em.clear_denominators(L.gram())
    n = L.rank
    out = {}
    for c in product(range(-box, box + 1), repeat=n):
        if any(c):
            nrm = sum(c[i] * G[i][j] * c[j] for i in range(n) for j in range(n))
            out.setdefault(Fraction(nrm, d), []).append(c)
    return out
