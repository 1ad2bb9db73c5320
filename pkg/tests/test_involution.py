import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from latkit import exactmat as em
from latkit import leech as lc
from latkit.involution import (Isometry, dihedral_report, eigenlattice, fixed_sublattice,
                               identity_isometry, is_rssd, is_ssd, order_of, order_on,
                               reflection_in, stabilizes, total_eigenlattice)
from latkit.lattice import Lattice, intersect, rescale, sum_lattices
from latkit.verify import ALL_CASES, is_ee8

from conftest import named


def z6_sublattice():
    return st.integers(1, 6).flatmap(
        lambda k: st.lists(st.lists(st.integers(-3, 3), min_size=6, max_size=6),
                           min_size=k, max_size=k)).filter(lambda r: em.rank(r) == len(r)) \
        .map(Lattice.euclidean)


class TestReflections:
    def test_whole_space_is_minus_one(self):
        L = Lattice.euclidean(em.identity(3))
        t = reflection_in(L)
        assert t.matrix == [[-1 if i == j else 0 for j in range(3)] for i in range(3)]

    def test_octad_reflection_is_sign_change(self):
        t = reflection_in(lc.e_octad(lc.OCTAD_1))
        assert t.matrix == lc.eps(lc.OCTAD_1).matrix

    @settings(max_examples=40, deadline=None)
    @given(z6_sublattice())
    def test_involution(self, X):
        t = reflection_in(X)
        assert (t * t).is_identity()
        assert t.preserves_form()
        assert order_of(t) == 2

    def test_rssd_implies_stabilization(self, case_pairs):
        for name, (M, N) in case_pairs.items():
            L = sum_lattices(M, N)
            for X in (M, N):
                assert is_rssd(L, X)
                assert stabilizes(reflection_in(X), L), name

    def test_identity_stabilizes(self):
        L = named("K12")
        assert stabilizes(identity_isometry(L), L)


class TestSSD:
    def test_scaled_unimodular(self):
        assert is_ssd(rescale(named("E8"), 2))
        assert is_ssd(rescale(Lattice.euclidean(em.identity(3)), 2))

    def test_d4_in_e8(self):
        E8 = named("E8")
        D4 = E8.with_basis([[2, -2, 0, 0, 0, 0, 0, 0], [0, 2, -2, 0, 0, 0, 0, 0],
                            [0, 0, 2, -2, 0, 0, 0, 0], [0, 0, 2, 2, 0, 0, 0, 0]])
        assert is_ssd(D4)
        assert stabilizes(reflection_in(D4), E8)

    def test_whole_lattice_is_rssd(self):
        L = named("D5")
        assert is_rssd(L, L)

    def test_a2_not_ssd(self):
        assert not is_ssd(named("A2"))


class TestOrders:
    def test_xi(self, leech_lattice):
        x = lc.xi()
        assert stabilizes(x, leech_lattice)
        assert order_of(x) == 2

    def test_dih10_product(self, case_pairs):
        M, N = case_pairs["dih10_16"]
        assert order_of(reflection_in(M) * reflection_in(N)) == 5

    def test_order_on_subspace(self, case_pairs):
        M, N = case_pairs["dih6_16"]
        g = reflection_in(M) * reflection_in(N)
        assert order_on(g, sum_lattices(M, N)) == 3


class TestEigenlattices:
    def test_octad_sign_change(self, leech_lattice):
        minus = eigenlattice(leech_lattice, lc.eps(lc.OCTAD_2), -1)
        assert is_ee8(minus)

    def test_dodecad(self, leech_lattice):
        dodecad = next(lc.from_mask(w) for w in lc.golay().words if bin(w).count("1") == 12)
        minus = eigenlattice(leech_lattice, lc.eps(dodecad), -1)
        assert minus.rank == 12 and minus.is_even()
        assert minus.determinant() == 2 ** 12

    def test_omega_is_minus_one(self):
        assert lc.eps(lc.OMEGA).matrix == [[-1 if i == j else 0 for j in range(24)] for i in range(24)]

    def test_identity_fixes_everything(self):
        L = named("A3")
        assert fixed_sublattice(L, identity_isometry(L)) == L

    def test_dih6_16_fixed_lattice_is_zero(self, case_pairs):
        M, N = case_pairs["dih6_16"]
        L = sum_lattices(M, N)
        assert fixed_sublattice(L, reflection_in(M) * reflection_in(N)).rank == 0

    def test_common_fixed_vectors_vanish(self, case_pairs):
        for name, (M, N) in case_pairs.items():
            L = sum_lattices(M, N)
            both = intersect(fixed_sublattice(L, reflection_in(M)), fixed_sublattice(L, reflection_in(N)))
            assert both.rank == 0, name


class TestTel:
    def test_empty_list(self):
        L = named("D4")
        assert total_eigenlattice(L, []) == L

    @pytest.mark.parametrize("name", ALL_CASES)
    def test_single_involution(self, case_pairs, name):
        from latkit.lattice import quotient_invariants
        M, N = case_pairs[name]
        L = sum_lattices(M, N)
        t = reflection_in(M)
        T = total_eigenlattice(L, [t])
        plus, minus = eigenlattice(L, t, 1), eigenlattice(L, t, -1)
        assert T == sum_lattices(plus, minus)
        q = quotient_invariants(L, T)
        assert set(q) <= {1, 2}
        c = q.count(2)
        assert plus.determinant() * minus.determinant() == 4 ** c * L.determinant()

    @pytest.mark.parametrize("name", ["dih4_12", "dih4_14", "dih4_15", "dih4_16"])
    def test_four_group(self, case_pairs, name):
        from latkit.lattice import quotient_invariants
        M, N = case_pairs[name]
        L = sum_lattices(M, N)
        invs = [reflection_in(M), reflection_in(N)]
        T = total_eigenlattice(L, invs)
        assert set(quotient_invariants(L, T)) <= {1, 2}


class TestReports:
    def test_disjoint_octads(self):
        M = lc.e_octad(lc.OCTAD_1)
        N = lc.e_octad(lc.partner_octad(0))
        r = dihedral_report(M, N)
        assert (r.is_integral, r.is_rootless, r.rank_L, r.product_order) == (True, True, 16, 2)
        assert r.smith == [2] * 16 and r.F_label == "0"

    def test_dih12(self, case_pairs):
        r = dihedral_report(*case_pairs["dih12_16"])
        assert r.product_order == 6 and r.smith == [1] * 12 + [6] * 4

    def test_degenerate(self):
        M = lc.e_octad(lc.OCTAD_1)
        r = dihedral_report(M, M)
        assert r.product_order == 1 and r.dihedral_order == 2 and r.degenerate
