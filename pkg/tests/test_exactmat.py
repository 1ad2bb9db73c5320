from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from latkit import exactmat as em

import oracle


def int_matrices(max_rows=5, max_cols=5, lo=-9, hi=9):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c),
                               min_size=r, max_size=r)))


def square(n_max=5, lo=-6, hi=6):
    return st.integers(1, n_max).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n),
                           min_size=n, max_size=n))


@st.composite
def unimodular(draw, n):
    U = em.identity(n)
    for _ in range(draw(st.integers(0, 3 * n))):
        i = draw(st.integers(0, n - 1))
        j = draw(st.integers(0, n - 1))
        if i != j:
            c = draw(st.integers(-3, 3))
            U[i] = [a + c * b for a, b in zip(U[i], U[j])]
    if draw(st.booleans()):
        U[0] = [-x for x in U[0]]
    return U


def is_hnf(H):
    rows = [r for r in H if any(r)]
    last = -1
    for r in rows:
        p = max(k for k, x in enumerate(r) if x)
        if p <= last or r[p] <= 0:
            return False
        last = p
    for i, r in enumerate(rows):
        p = max(k for k, x in enumerate(r) if x)
        for r2 in rows[i + 1:]:
            if not 0 <= r2[p] < r[p]:
                return False
    return all(not any(r) for r in H[len(rows):])


class TestHermite:
    def test_diagonal_is_canonical(self):
        H, U = em.hnf([[2, 0], [0, 2]])
        assert H == [[2, 0], [0, 2]] and U == em.identity(2)

    def test_small_example(self):
        A = [[1, 2], [3, 4]]
        H, U = em.hnf(A)
        assert em.mat_mul(U, A) == H
        assert abs(em.det(U)) == 1
        assert is_hnf(H)

    def test_zero_matrix(self):
        H, U = em.hnf([[0, 0], [0, 0]])
        assert H == [[0, 0], [0, 0]] and U == em.identity(2)

    @settings(max_examples=150, deadline=None)
    @given(int_matrices())
    def test_transform_and_shape(self, A):
        H, U = em.hnf(A)
        assert em.mat_mul(U, A) == H
        assert abs(em.det(U)) == 1
        assert is_hnf(H)

    @settings(max_examples=100, deadline=None)
    @given(int_matrices())
    def test_idempotent(self, A):
        H, _ = em.hnf(A)
        assert em.hnf(H)[0] == H

    @settings(max_examples=60, deadline=None)
    @given(int_matrices(4, 4))
    def test_rank_matches_oracle(self, A):
        assert em.rank(A) == oracle.rank(A)


class TestSmith:
    def test_a2(self):
        assert em.smith_divisors([[2, -1], [-1, 2]]) == [1, 3]

    def test_identity(self):
        assert em.smith_divisors(em.identity(5)) == [1] * 5

    @settings(max_examples=150, deadline=None)
    @given(int_matrices())
    def test_transform_identity(self, A):
        S = em.snf(A)
        assert em.mat_mul(em.mat_mul(S.U, A), S.V) == S.S
        assert abs(em.det(S.U)) == 1 and abs(em.det(S.V)) == 1
        nz = [d for d in S.divisors if d]
        assert all(b % a == 0 for a, b in zip(nz, nz[1:]))

    @settings(max_examples=80, deadline=None)
    @given(square().flatmap(lambda A: st.tuples(st.just(A), unimodular(len(A)), unimodular(len(A)))))
    def test_invariant_under_unimodular_factors(self, args):
        A, P, Q = args
        B = em.mat_mul(em.mat_mul(P, A), Q)
        assert em.smith_divisors(B) == em.smith_divisors(A)

    @settings(max_examples=80, deadline=None)
    @given(int_matrices(4, 4))
    def test_matches_sympy(self, A):
        assert [d for d in em.smith_divisors(A) if d] == oracle.smith(A)


class TestDeterminant:
    def test_empty(self):
        assert em.det([]) == 1

    @settings(max_examples=100, deadline=None)
    @given(square())
    def test_matches_sympy(self, A):
        assert em.det(A) == oracle.det(A)

    @settings(max_examples=80, deadline=None)
    @given(st.integers(1, 4).flatmap(lambda n: st.tuples(
        *[st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=n, max_size=n)] * 2)))
    def test_multiplicative(self, AB):
        A, B = AB
        assert em.det(em.mat_mul(A, B)) == em.det(A) * em.det(B)

    def test_rational_entries(self):
        A = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 4), 1]]
        assert em.det(A) == Fraction(1, 2) - Fraction(1, 12)


class TestSolveAndKernel:
    def test_identity_solve(self):
        assert em.solve_rational(em.identity(3), [4, -1, 7]) == [4, -1, 7]

    def test_a2_solve(self):
        assert em.solve_rational([[2, -1], [-1, 2]], [1, 1]) == [1, 1]

    def test_inconsistent(self):
        assert em.solve_rational([[1, 1], [2, 2]], [1, 3]) is None

    def test_kernel_examples(self):
        assert em.integer_kernel([[1], [-1]]) == [[1, 1]]
        assert em.integer_kernel(em.identity(3)) == []
        A = [[2], [4]]
        K = em.integer_kernel(A)
        assert len(K) == 1 and em.vec_mat(K[0], A) == [0]

    @settings(max_examples=100, deadline=None)
    @given(int_matrices(6, 3, -4, 4))
    def test_kernel_is_saturated_and_complete(self, A):
        K = em.integer_kernel(A)
        for k in K:
            assert all(x == 0 for x in em.vec_mat(k, A))
        assert len(K) == len(A) - em.rank(A)
        if K:
            # saturated: the gcd of the maximal minors is 1
            assert [d for d in em.smith_divisors(K) if d] == [1] * len(K)

    @settings(max_examples=60, deadline=None)
    @given(square(4, -5, 5))
    def test_inverse(self, A):
        if em.det(A) == 0:
            with pytest.raises(ZeroDivisionError):
                em.inverse(A)
        else:
            assert em.mat_mul(A, em.inverse(A)) == em.identity(len(A))
