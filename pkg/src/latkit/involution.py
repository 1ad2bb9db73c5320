"""Isometries, the involutions t_X, eigenlattices and dihedral pairs.

Isometries act on row vectors from the right: v -> v * g.  A product
``g * h`` means "apply g, then h".
"""
from fractions import Fraction
from itertools import product

from . import exactmat as em
from .lattice import Lattice, annihilator, intersect, sum_lattices, discriminant_group


class Isometry:
    def __init__(self, matrix, form, check=True):
        self.matrix = [[Fraction(x) for x in row] for row in matrix]
        self.form = [[Fraction(x) for x in row] for row in form]
        if check and not self.preserves_form():
            raise ValueError("matrix does not preserve the form")

    @property
    def dim(self):
        return len(self.matrix)

    def preserves_form(self):
        g = self.matrix
        return em.mat_mul(em.mat_mul(g, self.form), em.transpose(g)) == self.form

    def __mul__(self, other):
        return Isometry(em.mat_mul(self.matrix, other.matrix), self.form, check=False)

    def __pow__(self, k):
        out = identity_like(self)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        return isinstance(other, Isometry) and self.matrix == other.matrix

    def __hash__(self):
        return hash(tuple(map(tuple, self.matrix)))

    def is_identity(self):
        return self.matrix == em.identity(self.dim)

    def apply(self, v):
        return em.vec_mat(v, self.matrix)

    def image(self, L):
        """The lattice L*g."""
        return L.with_basis(em.mat_mul(L.basis, self.matrix))

    def inverse(self):
        return Isometry(em.inverse(self.matrix), self.form, check=False)


def identity_like(g):
    return Isometry(em.identity(g.dim), g.form, check=False)


def identity_isometry(L):
    return Isometry(em.identity(L.ambient_dim), L.form, check=False)


def reflection_in(X):
    """t_X: -1 on span(X), +1 on its orthogonal complement."""
    m = X.ambient_dim
    if X.rank == 0:
        return identity_isometry(X)
    # projection onto span(X): P = form * B^T * G^-1 * B
    B = X.basis
    Ginv = em.inverse(X.gram())
    P = em.mat_mul(em.mat_mul(em.mat_mul(X.form, em.transpose(B)), Ginv), B)
    t = [[Fraction(int(i == j)) - 2 * P[i][j] for j in range(m)] for i in range(m)]
    return Isometry(t, X.form, check=False)


def stabilizes(g, L):
    return g.image(L) == L


def order_of(g, cap=1000):
    h = g
    for n in range(1, cap + 1):
        if h.is_identity():
            return n
        h = h * g
    raise RuntimeError("isometry order exceeds %d" % cap)


def restricted_matrix(g, L):
    """Matrix of g on the Q-span of L in L's basis (rational)."""
    rows = []
    for b in L.basis:
        c = L.coordinates(g.apply(b))
        if c is None:
            raise ValueError("isometry does not preserve the span of L")
        rows.append(c)
    return rows


def order_on(g, L, cap=1000):
    """Order of g restricted to the Q-span of L."""
    A = restricted_matrix(g, L)
    n = len(A)
    I = em.identity(n)
    H = A
    for k in range(1, cap + 1):
        if H == I:
            return k
        H = em.mat_mul(H, A)
    raise RuntimeError("isometry order exceeds %d" % cap)


def eigenlattice(L, t, sign):
    """{x in L : x t = sign * x}."""
    if not stabilizes(t, L):
        raise ValueError("isometry does not stabilize the lattice")
    return _joint_eigen(L, [(t, sign)])


def fixed_sublattice(L, g):
    """Vectors of L fixed by g."""
    return _joint_eigen(L, [(g, 1)])


def _joint_eigen(L, pairs):
    B = L.basis
    if not B:
        return L
    m = L.ambient_dim
    blocks = []
    for t, s in pairs:
        diff = [[t.matrix[i][j] - (s if i == j else 0) for j in range(m)] for i in range(m)]
        blocks.append(em.mat_mul(B, diff))
    stacked = [sum((blk[i] for blk in blocks), []) for i in range(len(B))]
    ker = em.integer_kernel(stacked)
    return Lattice.span(L.form, [em.vec_mat(k, B) for k in ker], scale=L.scale)


def total_eigenlattice(L, invs):
    """Sum of all joint eigenlattices of commuting involutions."""
    if not invs:
        return L
    for a in invs:
        if not (a * a).is_identity():
            raise ValueError("not an involution")
        if not stabilizes(a, L):
            raise ValueError("involution does not stabilize the lattice")
        for b in invs:
            if a * b != b * a:
                raise ValueError("involutions do not commute")
    parts = [_joint_eigen(L, list(zip(invs, signs))) for signs in product((1, -1), repeat=len(invs))]
    return sum_lattices(*parts)


def is_rssd(L, M):
    """2L <= M + ann_L(M)."""
    if not L.contains_lattice(M):
        raise ValueError("M is not a sublattice of L")
    K = sum_lattices(M, annihilator(L, M))
    return all(K.contains([2 * x for x in v]) for v in L.basis)


def is_ssd(M):
    """2 M* <= M."""
    from .lattice import dual
    D = dual(M)
    return all(M.contains([2 * x for x in v]) for v in D.basis)


class DihedralReport:
    FIELDS = ("case_name", "is_integral", "is_rootless", "rank_L", "product_order",
              "dihedral_order", "smith", "det_L", "F_rank", "F_det", "F_smith", "F_label",
              "M_is_ee8", "N_is_ee8", "degenerate")

    def __init__(self, **kw):
        for k in self.FIELDS:
            setattr(self, k, kw.get(k))

    def to_json(self):
        out = {}
        for k in self.FIELDS:
            v = getattr(self, k)
            if isinstance(v, Fraction):
                v = str(v) if v.denominator != 1 else v.numerator
            out[k] = v
        return out


def dihedral_report(M, N, case_name=None):
    from .shortvec import is_rootless
    from .verify import is_ee8, identify_F
    L = sum_lattices(M, N)
    tM = reflection_in(M)
    tN = reflection_in(N)
    order = order_on(tM * tN, L)
    integral = L.is_integral()
    F = intersect(M, N)
    F_smith = discriminant_group(F) if F.is_integral() else None
    return DihedralReport(
        case_name=case_name,
        is_integral=integral,
        is_rootless=is_rootless(L) if integral else None,
        rank_L=L.rank,
        product_order=order,
        dihedral_order=2 * order if order > 1 else 2,
        smith=discriminant_group(L) if integral else None,
        det_L=L.determinant(),
        F_rank=F.rank,
        F_det=F.determinant(),
        F_smith=F_smith,
        F_label=identify_F(F),
        M_is_ee8=is_ee8(M),
        N_is_ee8=is_ee8(N),
        degenerate=(M == N),
    )
