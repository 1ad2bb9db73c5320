import random

import pytest

from latkit import leech as lc
from latkit.involution import reflection_in, stabilizes
from latkit.lattice import discriminant_group, intersect
from latkit.shortvec import count_norm
from latkit.verify import f_signature, f_candidates, is_ee8


class TestGolay:
    def test_hexacode(self):
        words = lc.hexacode()
        assert len(set(words)) == 64
        weights = sorted(sum(1 for x in w if x) for w in words)
        assert weights.count(0) == 1 and weights.count(4) == 45 and weights.count(6) == 18

    def test_weight_enumerator(self):
        assert lc.golay().weight_distribution() == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}

    def test_self_dual(self):
        assert lc.golay().is_self_dual()

    def test_fixed_words(self):
        words = lc.golay().words
        for o in (lc.OCTAD_1, lc.OCTAD_2, lc.OCTAD_3, lc.OCTAD_4):
            assert lc.to_mask(o) in words
        assert lc.to_mask(lc.OMEGA) in words

    def test_first_octad_is_two_columns(self):
        assert lc.OCTAD_1 == frozenset(lc.pos(r, c) for r in range(4) for c in (0, 1))

    def test_partner_octads(self):
        for k in (0, 2, 4):
            o = lc.partner_octad(k)
            assert len(lc.OCTAD_1.intersection(o)) == k
            earlier = [p for p in lc.golay().octads() if len(lc.OCTAD_1.intersection(p)) == k]
            assert o == earlier[0]


class TestLeech:
    def test_certificate(self, leech_lattice):
        L = leech_lattice
        assert L.rank == 24 and L.determinant() == 1 and L.is_even()

    def test_generators_inside(self, leech_lattice):
        for g in lc.leech_generators():
            assert leech_lattice.contains(g)

    def test_sample_norm(self, leech_lattice):
        v = [-3] + [1] * 23
        assert leech_lattice.contains(v) and leech_lattice.norm(v) == 4

    def test_rootless(self, leech_lattice):
        assert count_norm(leech_lattice, 2) == 0

    def test_octad_lattices(self, leech_lattice):
        assert is_ee8(lc.e_octad(lc.OCTAD_1))
        rng = random.Random(3)
        for o in rng.sample(lc.golay().octads(), 6):
            E = lc.e_octad(o)
            assert E.determinant() == 2 ** 8
            assert leech_lattice.contains_lattice(E)
            assert stabilizes(reflection_in(E), leech_lattice)

    def test_not_an_octad(self):
        with pytest.raises(ValueError):
            lc.e_octad(frozenset(range(1, 9)))

    def test_xi(self, leech_lattice):
        x = lc.xi()
        assert (x * x).is_identity()
        assert stabilizes(x, leech_lattice)

    def test_xi_image_meets_octad_in_aa2(self):
        E = lc.e_octad(lc.OCTAD_2)
        F = intersect(lc.xi().image(E), E)
        assert f_signature(F) == f_candidates()["AA2"]


class TestCases:
    @pytest.mark.parametrize("name", lc.CASES)
    def test_case_lattices_are_ee8_and_stabilize(self, leech_lattice, name):
        M, N = lc.case_data(name)
        for X in (M, N):
            assert is_ee8(X)
            assert leech_lattice.contains_lattice(X)
            assert stabilizes(reflection_in(X), leech_lattice)

    def test_dih8_16_dd4_annihilators(self):
        from latkit.lattice import annihilator, sum_lattices
        M, N = lc.case_data("dih8_16_dd4")
        A, B = annihilator(M, N), annihilator(N, M)
        dd4 = f_candidates()["DD4"]
        assert f_signature(A) == dd4 and f_signature(B) == dd4
        K = sum_lattices(annihilator(M, A), annihilator(N, B))
        assert K.determinant() == 2 ** 8 and is_ee8(K)

    def test_reference_grams_symmetric(self):
        for name in ("dih4_12", "dih4_14", "dih6_14", "dih6_16", "dih8_15", "dih8_16_0",
                     "dih8_16_dd4", "dih10_16", "dih12_16"):
            G = lc.reference_gram(name)
            assert all(G[i][j] == G[j][i] for i in range(len(G)) for j in range(len(G)))
