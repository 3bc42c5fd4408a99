"""Riordan group: entries three ways, group law, A/Z machinery, subgroups."""

from fractions import Fraction

import pytest

from riordan import (
    AZSequences,
    RiordanError,
    RiordanPair,
    Series,
    Triangle,
    a_sequence_by_solve,
    reconstruct_from_az,
)
from riordan.catalog import catalan_number, named_riordan

from conftest import random_pairs

PASCAL_5 = Triangle([[1], [1, 1], [1, 2, 1], [1, 3, 3, 1], [1, 4, 6, 4, 1]])


def test_g0_normalization_enforced():
    with pytest.raises(RiordanError):
        RiordanPair(Series.from_coeffs([2], 4), Series.t(4))
    with pytest.raises(RiordanError):
        RiordanPair(Series.one(4), Series.from_coeffs([0, 0, 1], 4))


class TestEntries:
    def test_closed_pascal(self, pascal):
        assert pascal.entry_closed(4, 2) == 6

    def test_closed_top_corner(self, ten_pairs):
        for ra in ten_pairs.values():
            assert ra.entry_closed(0, 0) == 1

    def test_closed_catalan(self, catalan_bell):
        assert catalan_bell.entry_closed(3, 1) == 5

    def test_vertical_pascal(self, pascal):
        # f = t/(1-t) has f_j = 1 for every j >= 1
        assert pascal.entry_vertical(3, 1) == 3

    def test_vertical_diagonal_is_f1_power(self):
        ra = RiordanPair(Series.one(12), Series.from_coeffs([0, Fraction(2, 3), 1], 12))
        for k in range(6):
            assert ra.entry_vertical(k, k) == Fraction(2, 3) ** k

    def test_nested_pascal_hand_expansion(self, pascal):
        assert pascal.entry_nested(2, 1) == 2  # f_1 g_1 + f_2 g_0

    def test_nested_column_zero_is_g(self, catalan_bell):
        for n in range(6):
            assert catalan_bell.entry_nested(n, 0) == catalan_bell.g[n]

    def test_out_of_range(self, pascal):
        with pytest.raises(RiordanError):
            pascal.entry_closed(2, 3)
        with pytest.raises(RiordanError):
            pascal.entry_closed(65, 0)


class TestTriangle:
    def test_pascal(self, pascal):
        assert pascal.triangle(5) == PASCAL_5

    def test_identity_array(self):
        ra = named_riordan("identity", 8)
        assert ra.triangle(4) == Triangle.identity(4)

    def test_catalan_column_zero(self, catalan_bell):
        tri = catalan_bell.triangle(5)
        assert [tri.rows[i][0] for i in range(5)] == [1, 1, 2, 5, 14]


class TestTripleOracle:
    def test_closed_equals_vertical(self, ten_pairs):
        for name, ra in ten_pairs.items():
            assert ra.triangle(41) == ra.triangle_closed(41), name

    def test_nested_agrees(self, ten_pairs):
        for name, ra in ten_pairs.items():
            tri = ra.triangle(11)
            for n in range(11):
                for k in range(n + 1):
                    assert ra.entry_nested(n, k) == tri.rows[n][k], (name, n, k)


class TestGroupLaw:
    def test_pascal_squared(self, pascal):
        sq = pascal * pascal
        assert sq.g.agrees_with(Series.geometric(40, 2))
        assert sq.f.agrees_with(Series.geometric(40, 2).shift_up().truncate(40))

    def test_identity_element(self, catalan_bell):
        e = RiordanPair.identity(64)
        assert (catalan_bell * e).agrees_with(catalan_bell)
        assert (e * catalan_bell).agrees_with(catalan_bell)

    def test_matrix_product_oracle(self, pascal, catalan_bell):
        n = 12
        left = (pascal * catalan_bell).triangle(n)
        assert left == pascal.triangle(n) @ catalan_bell.triangle(n)

    def test_pascal_inverse(self, pascal):
        inv = pascal.inverse()
        tri = inv.triangle(6)
        for n in range(6):
            for k in range(n + 1):
                from math import comb

                assert tri.rows[n][k] == (-1) ** (n - k) * comb(n, k)
        assert (pascal * inv).triangle(8) == Triangle.identity(8)

    def test_identity_self_inverse(self):
        e = RiordanPair.identity(16)
        assert e.inverse() == e

    def test_random_inverse_round_trip(self):
        e = RiordanPair.identity(40)
        for ra in random_pairs(10, prec=40):
            assert (ra * ra.inverse()).agrees_with(e)

    def test_group_axioms_at_finite_order(self, ten_pairs):
        n = 24
        a = ten_pairs["catalan_bell"]
        b = ten_pairs["random_a"]
        assert (a * b).triangle(n) == a.triangle(n) @ b.triangle(n)
        assert a.inverse().triangle(n) == a.triangle(n).inverse()


class TestFundamentalTheorem:
    def test_binomial_transform_of_ones(self, pascal):
        out = pascal.apply(Series.geometric(64))
        assert out.agrees_with(Series.geometric(64, 2))

    def test_identity_action(self):
        e = RiordanPair.identity(10)
        h = Series.from_coeffs([1, 5, Fraction(-1, 2)], 10)
        assert e.apply(h) == h

    def test_matrix_action_oracle(self, catalan_bell):
        n = 10
        h = Series.from_coeffs([1, 1, 2, 3, 5, 8], n - 1)
        out = catalan_bell.apply(h)
        expect = catalan_bell.triangle(n).apply(list(h.coeffs))
        assert list(out.coeffs[:n]) == expect


class TestAZSequences:
    def test_pascal(self, pascal):
        az = pascal.extract_az()
        assert list(az.a.coeffs[:6]) == [1, 1, 0, 0, 0, 0]
        assert list(az.z.coeffs[:6]) == [1, 0, 0, 0, 0, 0]

    def test_identity(self):
        az = RiordanPair.identity(12).extract_az()
        assert list(az.a.coeffs) == [1] + [0] * (az.a.prec)
        assert az.z.is_zero()

    def test_catalan_bell_all_ones(self, catalan_bell):
        az = catalan_bell.extract_az()
        assert list(az.a.coeffs[:10]) == [1] * 10
        assert list(az.z.coeffs[:10]) == [1] * 10

    def test_a_sequence_linear_system_oracle(self, ten_pairs):
        for name, ra in ten_pairs.items():
            az = ra.extract_az()
            solved = a_sequence_by_solve(ra, 12)
            assert solved == list(az.a.coeffs[:12]), name

    def test_reconstruct_pascal(self):
        az = AZSequences(Series([1, 1]), Series([1]))
        assert reconstruct_from_az(az, 5) == PASCAL_5

    def test_reconstruct_identity(self):
        az = AZSequences(Series([1]), Series([0]))
        assert reconstruct_from_az(az, 6) == Triangle.identity(6)

    def test_round_trip(self, ten_pairs):
        for name, ra in ten_pairs.items():
            assert reconstruct_from_az(ra.extract_az(), 20) == ra.triangle(20), name

    def test_improper_a_sequence(self):
        with pytest.raises(RiordanError):
            AZSequences(Series([0, 1]), Series([1]))


def test_pascal_identity_vertical():
    from math import comb

    for n in range(51):
        for k in range(1, n + 1):
            assert comb(n, k) == sum(comb(n - j, k - 1) for j in range(1, n - k + 2))


class TestSubgroups:
    def test_appell(self):
        ra = named_riordan("appell", 32, "geometric")
        assert "appell" in ra.subgroups()
        assert "lagrange" not in ra.subgroups()

    def test_catalan_bell_is_1_bell(self, catalan_bell):
        assert "1-bell" in catalan_bell.subgroups()

    def test_derivative_pair(self):
        # (f', f) for f = t/(1-t); tf'/f = 1/(1-t) differs from f' = 1/(1-t)^2,
        # so this pair is derivative but not hitting-time
        geo = Series.geometric(32)
        ra = RiordanPair((geo * geo).truncate(32), geo.shift_up().truncate(32))
        labels = ra.subgroups()
        assert "derivative" in labels
        assert "hitting-time" not in labels

    def test_pascal_is_hitting_time(self, pascal):
        # t f'/f = 1/(1-t) = g for f = t/(1-t)
        assert "hitting-time" in pascal.subgroups()

    def test_checkerboard(self, ten_pairs):
        assert "checkerboard" in ten_pairs["checkerboard"].subgroups()


class TestSemidirectSplit:
    def test_pascal(self, pascal):
        appell, lagrange = pascal.semidirect_split()
        assert appell.g == pascal.g and appell.f.agrees_with(Series.t(64))
        assert lagrange.f == pascal.f and lagrange.g.agrees_with(Series.one(64))
        assert (appell * lagrange).agrees_with(pascal)

    def test_identity(self):
        e = RiordanPair.identity(8)
        a, l = e.semidirect_split()
        assert a == e and l == e

    def test_factor_memberships(self, ten_pairs):
        for name, ra in ten_pairs.items():
            appell, lagrange = ra.semidirect_split()
            assert "appell" in appell.subgroups(), name
            assert "lagrange" in lagrange.subgroups(), name
            assert (appell * lagrange).agrees_with(ra), name
