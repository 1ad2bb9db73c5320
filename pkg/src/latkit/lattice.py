"""Positive-definite rational lattices inside an explicit quadratic space."""
import json
from fractions import Fraction

from . import exactmat as em


def _frac(x):
    if isinstance(x, str):
        return Fraction(x)
    return Fraction(x)


class Lattice:
    """A free Z-module spanned by the rows of ``basis`` in (Q^m, form).

    ``basis`` rows must be linearly independent; use :meth:`span` for an
    arbitrary generating set.  Rows may be rational.
    """

    def __init__(self, form, basis, scale=None, check=True):
        self.form = [[_frac(x) for x in row] for row in form]
        self.ambient_dim = len(self.form)
        self.basis = [[_frac(x) for x in row] for row in basis]
        # when the form is q*I we keep q to speed up inner products
        self.scale = _frac(scale) if scale is not None else _detect_scale(self.form)
        if check:
            for row in self.basis:
                if len(row) != self.ambient_dim:
                    raise ValueError("basis row length %d != ambient %d" % (len(row), self.ambient_dim))
            if em.rank(self.basis) != len(self.basis):
                raise ValueError("basis rows are linearly dependent")
        self._gram = self._compute_gram()
        self._canon = None

    # construction helpers

    @classmethod
    def span(cls, form, gens, scale=None):
        """The lattice generated by an arbitrary finite set of vectors."""
        gens = [[_frac(x) for x in row] for row in gens if any(row)]
        if not gens:
            return cls(form, [], scale=scale, check=False)
        d, M = em.clear_denominators(gens)
        rows = em.hnf_rows(M)
        basis = [[Fraction(x, d) for x in row] for row in rows]
        return cls(form, basis, scale=scale, check=False)

    @classmethod
    def euclidean(cls, basis, q=1):
        m = len(basis[0])
        form = [[Fraction(q) if i == j else Fraction(0) for j in range(m)] for i in range(m)]
        return cls(form, basis, scale=q)

    @classmethod
    def from_gram(cls, gram):
        """Lattice with the given Gram matrix, realised on the standard basis."""
        n = len(gram)
        return cls(gram, em.identity(n))

    def with_basis(self, basis):
        return Lattice(self.form, basis, scale=self.scale)

    def zero(self):
        return Lattice(self.form, [], scale=self.scale, check=False)

    # products

    def ip(self, u, v):
        if self.scale is not None:
            return self.scale * sum(a * b for a, b in zip(u, v) if a)
        return em.dot(em.vec_mat(u, self.form), v)

    def norm(self, v):
        return self.ip(v, v)

    def _compute_gram(self):
        B = self.basis
        if not B:
            return []
        if self.scale is not None:
            d, M = em.clear_denominators(B)
            G = em.mat_mul(M, em.transpose(M))
            f = self.scale / (d * d)
            return [[f * x for x in row] for row in G]
        BF = em.mat_mul(B, self.form)
        return [[Fraction(x) for x in row] for row in em.mat_mul(BF, em.transpose(B))]

    def gram(self):
        return [list(r) for r in self._gram]

    @property
    def rank(self):
        return len(self.basis)

    def determinant(self):
        return em.det(self._gram)

    def is_integral(self):
        return all(x.denominator == 1 for row in self._gram for x in row)

    def is_even(self):
        return self.is_integral() and all(self._gram[i][i].numerator % 2 == 0 for i in range(self.rank))

    def int_gram(self):
        return em.as_int(self._gram)

    # comparison

    def canonical_basis(self):
        """HNF of the basis, independent of the chosen basis."""
        if self._canon is None:
            if not self.basis:
                self._canon = ()
            else:
                d, M = em.clear_denominators(self.basis)
                H = em.hnf_rows(M)
                self._canon = tuple(tuple(Fraction(x, d) for x in row) for row in H)
        return self._canon

    def same_space(self, other):
        return self.form == other.form

    def __eq__(self, other):
        if not isinstance(other, Lattice):
            return NotImplemented
        return self.same_space(other) and self.canonical_basis() == other.canonical_basis()

    def __hash__(self):
        return hash(self.canonical_basis())

    def __repr__(self):
        return "Lattice(rank=%d, ambient_dim=%d, det=%s)" % (self.rank, self.ambient_dim, self.determinant())

    def coordinates(self, v):
        """Coordinates of v in this basis, or None if v is not in the Q-span."""
        if not self.basis:
            return [] if not any(v) else None
        return em.solve_rational(self.basis, v)

    def contains(self, v):
        c = self.coordinates(v)
        return c is not None and all(x.denominator == 1 for x in c)

    def contains_lattice(self, other):
        return all(self.contains(v) for v in other.basis)

    def to_ambient(self, coords):
        return em.vec_mat(coords, self.basis)

    # JSON

    def to_json(self):
        if self.scale is not None:
            form = {"kind": "scaled_identity", "num": self.scale.numerator, "den": self.scale.denominator}
        else:
            form = {"kind": "gram", "matrix": [[_fmt(x) for x in row] for row in self.form]}
        return {
            "ambient_dim": self.ambient_dim,
            "form": form,
            "basis": [[_fmt(x) for x in row] for row in self.basis],
        }

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        m = int(data["ambient_dim"])
        f = data["form"]
        if f["kind"] == "scaled_identity":
            q = Fraction(int(f["num"]), int(f["den"]))
            form = [[q if i == j else Fraction(0) for j in range(m)] for i in range(m)]
        elif f["kind"] == "gram":
            form = [[_frac(x) for x in row] for row in f["matrix"]]
            if len(form) != m or any(len(r) != m for r in form):
                raise ValueError("form matrix is not %dx%d" % (m, m))
            q = None
        else:
            raise ValueError("unknown form kind %r" % f["kind"])
        if any(form[i][j] != form[j][i] for i in range(m) for j in range(m)):
            raise ValueError("form is not symmetric")
        if not _positive_definite(form):
            raise ValueError("form is not positive definite")
        return cls(form, data["basis"], scale=q)


def _fmt(x):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)


def _detect_scale(form):
    if not form:
        return None
    q = form[0][0]
    for i, row in enumerate(form):
        for j, x in enumerate(row):
            if x != (q if i == j else 0):
                return None
    return q


def _positive_definite(form):
    # leading principal minors
    return all(em.det([row[:k] for row in form[:k]]) > 0 for k in range(1, len(form) + 1))


def _require_same(L1, L2):
    if not L1.same_space(L2):
        raise ValueError("lattices live in different quadratic spaces")


# algebra

def gram(L):
    return L.gram()


def rank(L):
    return L.rank


def determinant(L):
    return L.determinant()


def is_integral(L):
    return L.is_integral()


def is_even(L):
    return L.is_even()


def dual(L):
    """The dual lattice inside the Q-span of L."""
    if L.rank == 0:
        return L
    Ginv = em.inverse(L.gram())
    return L.with_basis(em.mat_mul(Ginv, L.basis))


def rescale(L, r):
    """The lattice sqrt(r)*L, realised by scaling the form."""
    r = Fraction(r)
    if r <= 0:
        raise ValueError("rescale factor must be positive")
    form = [[r * x for x in row] for row in L.form]
    scale = None if L.scale is None else r * L.scale
    return Lattice(form, L.basis, scale=scale, check=False)


def sum_lattices(*lats):
    L0 = lats[0]
    for L in lats[1:]:
        _require_same(L0, L)
    gens = [row for L in lats for row in L.basis]
    return Lattice.span(L0.form, gens, scale=L0.scale)


def scalar_multiple(L, k):
    """The sublattice k*L (same space)."""
    k = Fraction(k)
    return L.with_basis([[k * x for x in row] for row in L.basis])


def intersect(L1, L2):
    _require_same(L1, L2)
    if L1.rank == 0 or L2.rank == 0:
        return L1.zero()
    stacked = L1.basis + [[-x for x in row] for row in L2.basis]
    ker = em.integer_kernel(stacked)
    gens = [em.vec_mat(k[:L1.rank], L1.basis) for k in ker]
    return Lattice.span(L1.form, gens, scale=L1.scale)


def annihilator(L, S):
    """Vectors of L orthogonal to every vector of S."""
    _require_same(L, S)
    if S.rank == 0 or L.rank == 0:
        return L
    BF = em.mat_mul(L.basis, L.form)
    cross = em.mat_mul(BF, em.transpose(S.basis))
    ker = em.integer_kernel(cross)
    gens = [em.vec_mat(k, L.basis) for k in ker]
    return Lattice.span(L.form, gens, scale=L.scale)


def summand(L, S):
    """L intersected with the Q-span of S."""
    _require_same(L, S)
    if S.rank == 0:
        return L.zero()
    if em.rank(L.basis + S.basis) != L.rank:
        raise ValueError("S is not inside the Q-span of L")
    comp = annihilator(L, S)
    return annihilator(L, comp)


def coordinate_matrix(L, M):
    """Rows: coordinates of M's basis vectors in L's basis."""
    C = []
    for v in M.basis:
        c = L.coordinates(v)
        if c is None:
            raise ValueError("M is not inside the Q-span of L")
        C.append(c)
    return C


def index(L, M):
    """|L : M| for a full-rank sublattice M of L."""
    _require_same(L, M)
    if L.rank != M.rank:
        raise ValueError("rank mismatch")
    C = coordinate_matrix(L, M)
    if not em.is_integer_matrix(C):
        raise ValueError("M is not contained in L")
    i = abs(em.det(C))
    if i == 0:
        raise ValueError("M does not have full rank in L")
    # cross-check with determinants
    assert M.determinant() == i * i * L.determinant()
    return int(i)


def quotient_invariants(L, M):
    """Invariant factors of L/M (full-rank M in L)."""
    _require_same(L, M)
    if L.rank != M.rank:
        raise ValueError("rank mismatch")
    C = coordinate_matrix(L, M)
    if not em.is_integer_matrix(C):
        raise ValueError("M is not contained in L")
    return em.smith_divisors(em.as_int(C))


def discriminant_group(L):
    """Smith divisors of the Gram matrix (the structure of L*/L)."""
    if not L.is_integral():
        raise ValueError("discriminant group needs an integral lattice")
    if L.rank == 0:
        return []
    return em.smith_divisors(L.int_gram())


def orthogonal_sum(L1, L2):
    m1, m2 = L1.ambient_dim, L2.ambient_dim
    form = [list(r) + [Fraction(0)] * m2 for r in L1.form] + [[Fraction(0)] * m1 + list(r) for r in L2.form]
    basis = [list(r) + [Fraction(0)] * m2 for r in L1.basis] + [[Fraction(0)] * m1 + list(r) for r in L2.basis]
    scale = L1.scale if (L1.scale is not None and L1.scale == L2.scale) else None
    if m1 == 0:
        scale = L2.scale
    if m2 == 0:
        scale = L1.scale
    return Lattice(form, basis, scale=scale, check=False)


def glue(L0, gs):
    """Overlattice of L0 generated by extra rational vectors.

    Each glue vector must have a nonzero multiple in L0, i.e. lie in the
    Q-span of L0.  The result may be non-integral; callers check the flags.
    """
    for g in gs:
        if any(g) and L0.coordinates([Fraction(x) for x in g]) is None:
            raise ValueError("glue vector is not commensurable with the base lattice")
    return Lattice.span(L0.form, L0.basis + [list(g) for g in gs], scale=L0.scale)


def project(v, S):
    """Orthogonal projection of v onto the Q-span of S."""
    if S.rank == 0:
        return [Fraction(0)] * S.ambient_dim
    v = [Fraction(x) for x in v]
    c = [S.ip(v, b) for b in S.basis]
    y = em.solve_rational(S.gram(), c)
    return em.vec_mat(y, S.basis)


def is_sublattice(M, L):
    return M.same_space(L) and L.contains_lattice(M)
