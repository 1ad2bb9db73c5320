import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from latkit import exactmat as em
from latkit import shortvec as sv
from latkit import _enum_py
from latkit.atlas import a4_1, tensor
from latkit.lattice import Lattice, rescale
from latkit.verify import HERMITE_TABLE, HERMITE_TOL, check_shortvec_oracle, random_sublattice

import oracle
from conftest import named


def scramble(L, seed):
    rng = random.Random(seed)
    U = em.identity(L.rank)
    for _ in range(20):
        i, j = rng.sample(range(L.rank), 2)
        c = rng.choice([-3, -2, 2, 3])
        U[i] = [a + c * b for a, b in zip(U[i], U[j])]
    return L.with_basis(em.mat_mul(U, L.basis))


class TestLLL:
    def test_reduced_e8_keeps_row_space(self):
        E8 = named("E8")
        assert sv.lll_reduce(E8) == E8

    def test_scrambled_a2(self):
        A2 = scramble(named("A2"), 3)
        assert max(A2.norm(b) for b in A2.basis) > 2
        R = sv.lll_reduce(A2)
        assert R == A2 and R.norm(R.basis[0]) == 2

    def test_rank_one(self):
        L = Lattice.euclidean([[3, 4]])
        assert sv.lll_reduce(L).basis == L.basis


class TestCounts:
    def test_vectors_of_norm(self):
        assert len(sv.vectors_of_norm(named("A2"), 2)) == 6
        assert len(sv.vectors_of_norm(named("E8"), 2)) == 240
        assert len(sv.vectors_of_norm(a4_1(), 4)) == 10

    def test_minima(self):
        EE8 = named("EE8")
        assert sv.min_norm(EE8) == 4 and sv.count_norm(EE8, 4) == 240
        assert sv.min_norm(Lattice.euclidean([[1]])) == 1

    def test_rootless(self):
        assert sv.is_rootless(named("K12"))
        assert not sv.is_rootless(named("A2"))
        assert sv.is_rootless(named("DIH4_15"))
        assert sv.min_norm(named("DIH4_15")) == 4

    def test_both_signs_and_exact_norm(self):
        L = scramble(named("D5"), 9)
        S = sv.vectors_of_norm(L, 2)
        assert len(S) == 40
        G = L.gram()
        for c in S:
            assert em.dot(em.vec_mat(c, G), c) == 2
            assert tuple(-x for x in c) in S.vectors

    def test_rational_norms(self):
        from latkit.lattice import dual
        D = dual(named("A2"))
        assert len(sv.vectors_of_norm(D, Fraction(2, 3))) == 6

    def test_a2_tensor_e6_minimal_vectors(self):
        T = tensor(named("A2"), named("E6"))
        assert sv.min_norm(T) == 4
        assert sv.count_norm(T, 4) == 216 == 6 * 72 // 2

    def test_norm_counts_consistent(self):
        L = named("D4")
        counts = sv.norm_counts(L, 6)
        assert counts == {2: 24, 4: 24, 6: 96}
        assert sum(counts.values()) == len(sv.vectors_up_to(L, 6))


class TestOracle:
    @pytest.mark.parametrize("name", ["A1", "A2", "A3", "A4", "D4", "AA2", "A4_1", "M_4_25"])
    def test_named_rank_le_4(self, name):
        assert check_shortvec_oracle(named(name))

    def test_random_small(self):
        rng = random.Random(5)
        for _ in range(25):
            L = random_sublattice(rng, max_rank=4, entry=2)
            assert check_shortvec_oracle(L)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(1, 3).flatmap(lambda n: st.lists(
        st.lists(st.integers(-2, 2), min_size=5, max_size=5), min_size=n, max_size=n)))
    def test_hypothesis_vs_sympy_free_box(self, rows):
        if em.rank(rows) != len(rows):
            return
        L = Lattice.euclidean(rows)
        G = L.gram()
        m = sv.min_norm(L)
        Ginv = em.inverse(G)
        box = max(math.isqrt(int(m * Ginv[i][i]) + 1) + 1 for i in range(L.rank))
        assert sv.count_norm(L, m) == oracle.count_box(G, m, box)


class TestKernels:
    def test_backend_is_reported(self):
        assert sv.BACKEND in ("cython", "python")

    @pytest.mark.skipif(sv.BACKEND != "cython", reason="compiled kernel not built")
    @pytest.mark.parametrize("name,norm", [("E8", 2), ("E8", 4), ("K12", 4), ("D5", 6), ("BW16", 4)])
    def test_cython_equals_python(self, name, norm):
        from latkit import _enum
        L = named(name)
        a = sv.vectors_of_norm(L, norm, kernel=_enum).vectors
        b = sv.vectors_of_norm(L, norm, kernel=_enum_py).vectors
        assert a == b

    def test_large_entries_fall_back(self):
        L = rescale(named("A2"), 2 ** 30)
        assert len(sv.vectors_of_norm(L, 2 ** 31)) == 6


class TestHermite:
    def test_table(self):
        for n, d, s in HERMITE_TABLE:
            assert abs(sv.hermite(n, d) - float(s)) <= HERMITE_TOL, (n, d, s)

    def test_closed_values(self):
        assert sv.hermite(1, 1) == 1
        assert abs(sv.hermite(2, 3) - 2.0) <= 5e-9
        assert abs(sv.hermite(4, 25) - 3.442651865) <= 5e-9

    def test_guarantee(self):
        assert sv.satisfies_hermite(named("E8"))
        assert sv.satisfies_hermite(named("A2"))
