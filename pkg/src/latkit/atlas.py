"""Named lattices: root lattices and their sqrt(2) copies, half-spin
lattices, A4(1), M(4,25), tensor products, Coxeter-Todd, BW16, Leech and
the rank-15 DIH4 glueing.

Every named lattice carries a certificate (rank, det, evenness, minimum,
Smith divisors) computed from the construction itself.
"""
import re
from fractions import Fraction
from functools import lru_cache

from . import exactmat as em
from .lattice import (Lattice, annihilator, discriminant_group, glue, intersect,
                      orthogonal_sum, rescale, sum_lattices)
from .shortvec import count_norm, min_norm


def _diag_form(entries):
    n = len(entries)
    return [[Fraction(entries[i]) if i == j else Fraction(0) for j in range(n)] for i in range(n)]


def _unit(n, i, k=1):
    v = [0] * n
    v[i] = k
    return v


def _simple_roots_a(n):
    return [[1 if k == i else (-1 if k == i + 1 else 0) for k in range(n + 1)] for i in range(n)]


def _simple_roots_d(n):
    rows = [[1 if k == i else (-1 if k == i + 1 else 0) for k in range(n)] for i in range(n - 1)]
    rows.append([1 if k in (n - 2, n - 1) else 0 for k in range(n)])
    return rows


def e8_model():
    """E8 in doubled coordinates (form I/4): D8 plus (1/2)(1,...,1)."""
    gens = [[2 * x for x in r] for r in _simple_roots_d(8)] + [[1] * 8]
    return Lattice.span(_diag_form([Fraction(1, 4)] * 8), gens, scale=Fraction(1, 4))


def root_lattice(kind, n=None):
    """A_n, D_n (n >= 3), E6, E7, E8 in their standard models."""
    kind = kind.upper()
    if kind == "A":
        if not n or n < 1:
            raise ValueError("A_n needs n >= 1")
        return Lattice.euclidean(_simple_roots_a(n))
    if kind == "D":
        if not n or n < 3:
            raise ValueError("D_n needs n >= 3")
        return Lattice.euclidean(_simple_roots_d(n))
    if kind == "E" and n == 8:
        return e8_model()
    if kind == "E" and n == 7:
        # coordinate sum zero
        E8 = e8_model()
        return annihilator(E8, E8.with_basis([[1] * 8]))
    if kind == "E" and n == 6:
        # equal first three coordinates
        E8 = e8_model()
        return annihilator(E8, E8.with_basis([[1, -1, 0, 0, 0, 0, 0, 0], [0, 1, -1, 0, 0, 0, 0, 0]]))
    raise ValueError("no root lattice %s%s" % (kind, n))


def scaled(kind, n=None):
    """sqrt(2) times a root lattice (AA_n, DD_n, EE_n)."""
    return rescale(root_lattice(kind, n), 2)


def half_spin(n):
    """D_n together with (1/2)(1,...,1), in doubled coordinates."""
    if n < 4 or n % 2:
        raise ValueError("half-spin lattice needs even n >= 4")
    gens = [[2 * x for x in r] for r in _simple_roots_d(n)] + [[1] * n]
    return Lattice.span(_diag_form([Fraction(1, 4)] * n), gens, scale=Fraction(1, 4))


def a4_1():
    """Rank 4, Gram 5I - J (diagonal 4, off-diagonal -1)."""
    return Lattice.from_gram([[4 if i == j else -1 for j in range(4)] for i in range(4)])


A2_GRAM = [[2, -1], [-1, 2]]


def _a2_sum_root5():
    """A2 + sqrt5 A2 on Q^4, in root coordinates."""
    form = [[0] * 4 for _ in range(4)]
    for i in range(2):
        for j in range(2):
            form[i][j] = A2_GRAM[i][j]
            form[2 + i][2 + j] = 5 * A2_GRAM[i][j]
    return Lattice(form, em.identity(4))


def m_4_25():
    """A2 + sqrt5 A2 glued by u + v, u and v fundamental weights."""
    base = _a2_sum_root5()
    w = Fraction(1, 3)
    return glue(base, [[2 * w, w, 2 * w, w]])


def m_4_25_frame(X=None):
    """Pairwise orthogonal u, v, w, x in M(4,25) of norms 2, 4, 10, 20.

    u is a root, v a norm 4 vector orthogonal to u, and (w, x) the
    rectangular basis of ann(u, v).
    """
    from .shortvec import vectors_of_norm
    X = X or m_4_25()
    u = X.to_ambient(vectors_of_norm(X, 2).vectors[-1])
    for c in reversed(vectors_of_norm(X, 4).vectors):
        v = X.to_ambient(c)
        if X.ip(u, v) == 0:
            break
    else:
        raise RuntimeError("no norm 4 vector orthogonal to a root")
    P = annihilator(X, X.with_basis([u, v]))
    w = x = None
    for c in reversed(vectors_of_norm(P, 10).vectors):
        w = P.to_ambient(c)
        Q = annihilator(P, P.with_basis([w]))
        x = Q.basis[0]
        if Q.norm(x) == 20:
            break
    if w is None or X.norm(x) != 20:
        raise RuntimeError("M(4,25) frame not found")
    return u, v, w, x


def m_4_25_double_glue():
    """Two orthogonal M(4,25) copies glued by gamma, gamma' into a rank 8 lattice.

    gamma = (w + x + x')/5, gamma' = (x + w' - x')/5.
    """
    X = m_4_25()
    u, v, w, x = m_4_25_frame(X)
    D = orthogonal_sum(X, X)
    z = [Fraction(0)] * 4
    w1, x1 = list(w) + z, list(x) + z
    w2, x2 = z + list(w), z + list(x)
    g1 = [(a + b + c) / 5 for a, b, c in zip(w1, x1, x2)]
    g2 = [(a + b - c) / 5 for a, b, c in zip(x1, w2, x2)]
    return glue(D, [g1, g2])


def tensor(A, B):
    """A (x) B on the standard basis: Gram is the Kronecker product."""
    GA, GB = A.gram(), B.gram()
    G = [[GA[i][k] * GB[j][l] for k in range(len(GA)) for l in range(len(GB))]
         for i in range(len(GA)) for j in range(len(GB))]
    if not G:
        return Lattice([], [], check=False)
    return Lattice.from_gram(G)


def tensor_embedding_check(A, g):
    """For A with an order-3 isometry g: A + Ag is A (x) A2/2 via a_i, a_i g,
    and ann_{A+Ag}(A) has the invariants of sqrt3 A.
    """
    if A.rank == 0:
        return True
    if not (g * g * g).is_identity():
        raise ValueError("g does not have order 3")
    Ag = [g.apply(a) for a in A.basis]
    if em.rank(A.basis + Ag) != 2 * A.rank:
        raise ValueError("A and Ag are not independent")
    GA = A.gram()
    half = Fraction(1, 2)
    for i, a in enumerate(A.basis):
        for j in range(A.rank):
            if A.ip(a, Ag[j]) != -half * GA[i][j] or A.ip(Ag[i], Ag[j]) != GA[i][j]:
                return False
    R = sum_lattices(A, A.with_basis(Ag))
    ann = annihilator(R, A)
    if ann.rank != A.rank or ann.determinant() != 3 ** A.rank * A.determinant():
        return False
    if A.is_integral():
        return discriminant_group(ann) == [3 * d for d in discriminant_group(A)]
    return True


# constructions from the explicit Leech data

def dih6_14_pieces():
    """(L, F, J, K) for the rank-14 DIH6 pair: F = M n N, J = ann_L(F),
    K = (M n J) + (N n J)."""
    from . import leech as lc
    M, N = lc.case_data("dih6_14")
    L = sum_lattices(M, N)
    F = intersect(M, N)
    J = annihilator(L, F)
    K = sum_lattices(intersect(M, J), intersect(N, J))
    return L, F, J, K


def coxeter_todd():
    return dih6_14_pieces()[2]


def barnes_wall16():
    """ann of E(O3) in the Leech lattice."""
    from . import leech as lc
    return annihilator(lc.leech_lattice(), lc.e_octad(lc.OCTAD_3))


# rank-15 DIH4 glueing on 1 + 8 + 8 coordinates

DIH4_15_GLUE = [1, 1, 1, 1, 1, 1, -3, -3]


def _ee7_rows():
    # E7 (sum zero vectors of E8) in coordinates 4x, so form I/8 gives sqrt2 E7
    return [[2 * x for x in r] for r in root_lattice("E", 7).basis]


def dih4_15():
    """(M, N, L): F = Z alpha, (alpha, alpha) = 4, P, Q = EE7 on disjoint
    axes, M = F + P + Z(alpha/2 + xi_M), N likewise.
    """
    form = _diag_form([1] + [Fraction(1, 8)] * 16)
    z8 = [0] * 8
    alpha = [2] + z8 + z8
    P = [[0] + [int(x) for x in r] + z8 for r in _ee7_rows()]
    Q = [[0] + z8 + [int(x) for x in r] for r in _ee7_rows()]
    glue_m = [1] + DIH4_15_GLUE + z8
    glue_n = [1] + z8 + DIH4_15_GLUE
    M = Lattice.span(form, [alpha] + P + [glue_m])
    N = Lattice.span(form, [alpha] + Q + [glue_n])
    return M, N, sum_lattices(M, N)


# the atlas proper

class NamedLattice:
    def __init__(self, name, lattice):
        self.name = name
        self.lattice = lattice
        self._cert = None

    def certificate(self):
        if self._cert is None:
            self._cert = certify(self.lattice)
        return self._cert

    def to_json(self):
        out = {"name": self.name, "lattice": self.lattice.to_json()}
        out["certificate"] = self.certificate()
        return out


def certify(L):
    """Exact invariant record of a lattice."""
    det = L.determinant()
    integral = L.is_integral()
    even = L.is_even()
    if L.rank == 0:
        mn = None
    elif even and L.rank >= 16 and count_norm(L, 2) == 0 and any(L.norm(b) == 4 for b in L.basis):
        # even, rootless and a norm 4 basis vector: the minimum is 4
        mn = Fraction(4)
    else:
        mn = min_norm(L)
    return {
        "rank": L.rank,
        "det": _num(det),
        "integral": integral,
        "even": even,
        "min_norm": _num(mn) if mn is not None else None,
        "smith": discriminant_group(L) if integral else None,
    }


def _num(x):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)


FIXED = {
    "E6": lambda: root_lattice("E", 6),
    "E7": lambda: root_lattice("E", 7),
    "E8": lambda: root_lattice("E", 8),
    "EE6": lambda: scaled("E", 6),
    "EE7": lambda: scaled("E", 7),
    "EE8": lambda: scaled("E", 8),
    "A4_1": a4_1,
    "M_4_25": m_4_25,
    "K12": coxeter_todd,
    "BW16": barnes_wall16,
    "DIH4_15": lambda: dih4_15()[2],
}


def _leech():
    from . import leech as lc
    return lc.leech_lattice()


FIXED["LEECH"] = _leech

NAMES = ("A_n", "D_n", "E6", "E7", "E8", "AA_n", "DD_n", "EE6", "EE7", "EE8",
         "HS_n", "A4_1", "M_4_25", "K12", "BW16", "LEECH", "DIH4_15")


@lru_cache(maxsize=None)
def atlas(name):
    """Look up a named lattice, e.g. 'A2', 'DD4', 'EE8', 'HS16', 'K12'."""
    key = name.upper()
    if key in FIXED:
        return NamedLattice(key, FIXED[key]())
    m = re.fullmatch(r"(AA|DD|A|D|HS)(\d+)", key)
    if m:
        kind, n = m.group(1), int(m.group(2))
        if kind == "HS":
            return NamedLattice(key, half_spin(n))
        if kind in ("AA", "DD"):
            return NamedLattice(key, scaled(kind[0], n))
        return NamedLattice(key, root_lattice(kind, n))
    raise KeyError("unknown lattice name %r" % name)
