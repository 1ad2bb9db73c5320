"""Golay code in MOG layout, the standard Leech lattice and the explicit pairs.

Coordinates: the 24 points sit in a 4x6 array and are numbered down each
column in turn, so row r, column c (both from 0) is point 4*c + r.  Leech
vectors are integer 24-tuples with inner product x.y/8, so the unit vector
e_i is 4 at position i.
"""
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

from . import casedata as cd
from . import exactmat as em
from .involution import Isometry
from .lattice import Lattice

Q = Fraction(1, 8)
OMEGA = frozenset(range(24))


def pos(r, c):
    return 4 * c + r


# the four fixed octads of the MOG picture
OCTAD_1 = frozenset(range(8))
OCTAD_2 = frozenset([pos(0, c) for c in range(1, 6)] + [pos(r, 0) for r in (1, 2, 3)])
OCTAD_3 = frozenset(range(16, 24))
OCTAD_4 = frozenset(pos(r, c) for r in (0, 1) for c in range(2, 6))


# GF(4) as 0, 1, w=2, w^2=3 with xor addition
_LOG = {1: 0, 2: 1, 3: 2}
_EXP = [1, 2, 3]


def _gf4_mul(a, b):
    if a == 0 or b == 0:
        return 0
    return _EXP[(_LOG[a] + _LOG[b]) % 3]


def hexacode():
    """The 64 words (a, b, c, f(1), f(w), f(w^2)) with f(x) = a x^2 + b x + c."""
    words = []
    for a, b, c in product(range(4), repeat=3):
        w = [a, b, c]
        for x in (1, 2, 3):
            w.append(_gf4_mul(a, _gf4_mul(x, x)) ^ _gf4_mul(b, x) ^ c)
        words.append(tuple(w))
    return words


class GolayCode:
    """Extended binary Golay code, words stored as 24-bit masks."""

    def __init__(self):
        words = set()
        # score of a column = sum of row labels 0, 1, w, w^2 over its marked rows
        col_sets = {}
        for bits in range(16):
            rows = [r for r in range(4) if bits >> r & 1]
            score = 0
            for r in rows:
                score ^= r
            col_sets.setdefault((len(rows) % 2, score), []).append(bits)
        for h in hexacode():
            for parity in (0, 1):
                choices = [col_sets[(parity, h[c])] for c in range(6)]
                for pick in product(*choices):
                    top = sum(b & 1 for b in pick) % 2
                    if top != parity:
                        continue
                    mask = 0
                    for c, b in enumerate(pick):
                        mask |= b << (4 * c)
                    words.add(mask)
        self.words = frozenset(words)
        self.generator = _gf2_basis(sorted(self.words))
        self._check()

    def _check(self):
        if len(self.words) != 4096 or len(self.generator) != 12:
            raise RuntimeError("Golay construction failed")
        for o in (OCTAD_1, OCTAD_2, OCTAD_3, OCTAD_4):
            if to_mask(o) not in self.words:
                raise RuntimeError("fixed octad missing from the code")

    def __contains__(self, s):
        return (s if isinstance(s, int) else to_mask(s)) in self.words

    def weight_distribution(self):
        dist = {}
        for w in self.words:
            k = bin(w).count("1")
            dist[k] = dist.get(k, 0) + 1
        return dict(sorted(dist.items()))

    def octads(self):
        """All 759 octads as sorted tuples, in lexicographic order."""
        return sorted(tuple(from_mask(w)) for w in self.words if bin(w).count("1") == 8)

    def generator_rows(self):
        return [[w >> i & 1 for i in range(24)] for w in self.generator]

    def is_self_dual(self):
        for a in self.generator:
            for b in self.generator:
                if bin(a & b).count("1") % 2:
                    return False
        return len(self.generator) == 12


def to_mask(s):
    m = 0
    for i in s:
        m |= 1 << i
    return m


def from_mask(m):
    return [i for i in range(24) if m >> i & 1]


def _gf2_basis(words):
    basis = []
    pivots = []
    for w in words:
        for b, p in zip(basis, pivots):
            if w >> p & 1:
                w ^= b
        if w:
            p = w.bit_length() - 1
            for i, b in enumerate(basis):
                if b >> p & 1:
                    basis[i] = b ^ w
            basis.append(w)
            pivots.append(p)
    return sorted(basis, reverse=True)


@lru_cache(maxsize=None)
def golay():
    return GolayCode()


def unit(i, k=4):
    v = [0] * 24
    v[i] = k
    return v


def half_e(s):
    """(1/2) e_S: coordinate 2 on S."""
    return [2 if i in s else 0 for i in range(24)]


def leech_generators():
    gens = [[2 * x for x in row] for row in golay().generator_rows()]
    gens.append([-3] + [1] * 23)
    for i in range(23):
        gens.append([4 if k in (i, i + 1) else 0 for k in range(24)])
        gens.append([4 if k == i else (-4 if k == i + 1 else 0) for k in range(24)])
    return gens


class LeechContext:
    def __init__(self):
        self.golay = golay()
        self.lattice = Lattice.span(_form(), leech_generators(), scale=Q)
        self.frame = [unit(i, 8) for i in range(24)]
        L = self.lattice
        if L.rank != 24 or L.determinant() != 1 or not L.is_even():
            raise RuntimeError("Leech lattice certificate failed")


def _form():
    return [[Q if i == j else Fraction(0) for j in range(24)] for i in range(24)]


@lru_cache(maxsize=None)
def leech():
    return LeechContext()


def leech_lattice():
    return leech().lattice


def vectors(rows):
    """Sublattice of the Leech space spanned by integer 24-tuples."""
    return Lattice(_form(), rows, scale=Q)


def span(rows):
    return Lattice.span(_form(), rows, scale=Q)


def e_octad_generators(octad):
    o = sorted(octad)
    gens = []
    for i, j in combinations(o, 2):
        gens.append([4 if k in (i, j) else 0 for k in range(24)])
        gens.append([4 if k == i else (-4 if k == j else 0) for k in range(24)])
    gens.append(half_e(set(o)))
    return gens


def e_octad(octad):
    """E(O) = span{e_i +- e_j (i, j in O), (1/2) e_O}."""
    if len(octad) != 8 or to_mask(octad) not in golay().words:
        raise ValueError("not an octad of the code")
    return span(e_octad_generators(octad))


_XI_A = [[-1, 1, 1, 1], [1, -1, 1, 1], [1, 1, -1, 1], [1, 1, 1, -1]]


@lru_cache(maxsize=None)
def xi():
    """X -> A X D on 4x6 arrays; A mixes each column, D negates column 0."""
    M = [[Fraction(0)] * 24 for _ in range(24)]
    for c in range(6):
        d = -1 if c == 0 else 1
        for r in range(4):
            for s in range(4):
                # new[4c+r] = d * sum_s A[r][s]/2 * old[4c+s]
                M[pos(s, c)][pos(r, c)] = Fraction(d * _XI_A[r][s], 2)
    return Isometry(M, _form())


def eps(s):
    """Negate the frame coordinates in s."""
    M = [[Fraction(0)] * 24 for _ in range(24)]
    for i in range(24):
        M[i][i] = Fraction(-1 if i in s else 1)
    return Isometry(M, _form())


def apply(rows, g):
    return [[x for x in em.vec_mat(r, g.matrix)] for r in rows]


def _int_rows(rows):
    return [[int(x) for x in r] for r in rows]


# dih4 family: pairs of octads meeting in 0, 2 or 4 points

def partner_octad(size):
    """Lexicographically least octad meeting OCTAD_1 in exactly `size` points."""
    for o in golay().octads():
        if len(OCTAD_1.intersection(o)) == size:
            return o
    raise ValueError("no octad with intersection %d" % size)


def _dih4_orders(size):
    """Orderings i_1..i_8 and j_1..j_8: shared points first, then the rest."""
    o = sorted(OCTAD_1)
    p = partner_octad(size)
    shared = sorted(set(o) & set(p))
    i = shared + [k for k in o if k not in shared]
    j = shared + [k for k in p if k not in shared]
    return i, j


def _e(idx, sign=1):
    return unit(idx, 4 * sign)


def _add(*vs):
    return [sum(t) for t in zip(*vs)]


def _neg(v):
    return [-x for x in v]


def dih4_12_bases():
    i, j = _dih4_orders(4)
    F = [_add(_e(i[0]), _e(i[1])), _add(_e(i[0]), _e(i[1], -1)),
         _add(_e(i[1]), _e(i[2], -1)), _add(_e(i[2]), _e(i[3], -1))]
    M_rest = [_add(_e(i[k]), _e(i[k + 1], -1)) for k in (3, 4, 5)] + [_neg(half_e(set(i)))]
    N_rest = [_add(_e(j[k]), _e(j[k + 1], -1)) for k in (3, 4, 5)] + [_neg(half_e(set(j)))]
    return F + M_rest, F + N_rest, F + M_rest + N_rest


def dih4_14_bases():
    i, j = _dih4_orders(2)
    # k runs 7 down to 3 (1-based); the reference Gram matrix fixes this range
    M = [half_e(set(i))]
    M += [_add(_e(i[k - 1], -1), _e(i[k - 2])) for k in range(7, 2, -1)]
    shared = [_add(_e(i[1], -1), _e(i[0])), _add(_e(i[0], -1), _e(i[1], -1))]
    M += shared
    N_rest = [_add(_e(j[k - 2]), _e(j[k - 1], -1)) for k in range(3, 8)] + [half_e(set(j))]
    return M, shared + N_rest, M + N_rest


def dih4_16_bases():
    p = partner_octad(0)
    M = e_octad(OCTAD_1).basis
    N = e_octad(p).basis
    return _int_rows(M), _int_rows(N), _int_rows(M) + _int_rows(N)


def _xi_rows(rows):
    return _int_rows(apply(rows, xi()))


def dih8_16_0_m_basis():
    """The ordered basis of E(OCTAD_1) matching the reference Gram matrix."""
    rows = [_neg(_add(_e(0), _e(1))), _add(_e(0), _e(1, -1))]
    rows += [_add(_e(k), _e(k + 1, -1)) for k in range(1, 6)]
    rows.append(half_e(OCTAD_1))
    return rows


CASES = ("dih4_16", "dih4_14", "dih4_12", "dih6_14", "dih6_16", "dih8_15",
         "dih8_16_0", "dih8_16_dd4", "dih10_16", "dih12_16")


def literal_bases(name):
    """(M basis, N basis, ordered basis of M+N) exactly as in the reference data."""
    if name == "dih6_14":
        g = cd.E_O2_BASIS
        gx = _xi_rows(g)
        return g, g[:2] + gx[2:], g + gx[2:]
    if name == "dih8_16_0":
        return cd.E_O1_BASIS, cd.DIH8_16_0_N, cd.E_O1_BASIS + cd.DIH8_16_0_N
    if name == "dih8_16_dd4":
        gx = _xi_rows(cd.E_O2_BASIS)
        return gx, cd.DIH8_16_DD4_N, cd.DIH8_16_DD4_N + gx
    return case_bases(name)


# cases whose reference Gram matrix comes from a different basis of the same
# lattices than the literal one
BASIS_NOTES = {
    "dih6_14": "13th basis vector taken as -gamma_7 xi; the literal +gamma_7 xi gives 4 differing entries",
    "dih8_16_0": "M basis -(e1+e2), e1-e2, e2-e3, .., e6-e7, e_O1/2 of E(O1); the literal beta_i give a different Gram",
    "dih8_16_dd4": "no basis with the literal first 15 vectors reproduces row 16 of the reference Gram",
}


def case_bases(name):
    """(M basis, N basis, ordered basis of M+N) as integer 24-tuples.

    The ordered basis is the one whose Gram matrix is the reference one, where such a
    basis of the same pair exists (see BASIS_NOTES).
    """
    if name == "dih4_16":
        return dih4_16_bases()
    if name == "dih4_14":
        return dih4_14_bases()
    if name == "dih4_12":
        return dih4_12_bases()
    if name == "dih6_16":
        return cd.E_O1_BASIS, cd.DIH6_16_N, cd.E_O1_BASIS + cd.DIH6_16_N
    if name == "dih6_14":
        g = cd.E_O2_BASIS
        gx = _xi_rows(g)
        gx[6] = _neg(gx[6])
        return g, g[:2] + gx[2:], g + gx[2:]
    if name == "dih8_16_0":
        m = dih8_16_0_m_basis()
        return m, cd.DIH8_16_0_N, m + cd.DIH8_16_0_N
    if name == "dih8_16_dd4":
        return literal_bases(name)
    if name == "dih8_15":
        m = cd.DIH8_15_M
        extra = cd.DIH8_15_N_EXTRA
        n = [extra[0], m[1]] + extra[1:]
        return m, n, m + extra
    if name == "dih10_16":
        return cd.DIH10_16_M, cd.DIH10_16_N, cd.DIH10_16_M + cd.DIH10_16_N
    if name == "dih12_16":
        return cd.DIH12_16_M, cd.DIH12_16_N, cd.DIH12_16_M + cd.DIH12_16_N
    raise KeyError("unknown case %r" % name)


def case_data(name):
    """The pair (M, N) of EE8 sublattices of the Leech lattice."""
    M, N, _ = case_bases(name)
    return vectors(M), vectors(N)


def reference_gram(name):
    return cd.GRAMS.get(name)
