"""Canonical coordinates and the elementary product formulas."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hada import sampling
from hada.errors import DimensionMismatch, HadaError, StratumError, UnsupportedShapeError
from hada.forms import HomogeneousForm, membership
from hada.projective import (
    UNDEFINED,
    Hyperplane,
    LinearSubspace,
    PointSet,
    ProjPoint,
    coordinate_hyperplane,
    delta_level,
    hadamard_points,
    hyperplane_product,
    pairwise_products,
    point_hyperplane_product,
)

rationals = st.fractions(
    min_value=-100, max_value=100, max_denominator=30
)


def coord_lists(length):
    return st.lists(rationals, min_size=length, max_size=length).filter(
        lambda c: any(x != 0 for x in c)
    )


class TestCanonicalForm:
    def test_examples(self):
        assert ProjPoint([2, 4, 6]).coords == (1, 2, 3)
        assert ProjPoint(["-1/2", "1/3", 0]).coords == (3, -2, 0)
        assert ProjPoint([0, 0, -5]).coords == (0, 0, 1)

    def test_all_zero_rejected(self):
        with pytest.raises(HadaError):
            ProjPoint([0, 0, 0])

    @given(coord_lists(3))
    def test_idempotent(self, coords):
        p = ProjPoint(coords)
        assert ProjPoint(p.coords) == p

    @given(coord_lists(4), rationals.filter(lambda r: r != 0))
    def test_scaling_invariance(self, coords, scale):
        assert ProjPoint(coords) == ProjPoint([scale * c for c in coords])

    def test_first_nonzero_positive_and_primitive(self):
        from math import gcd

        rng = random.Random(7)
        for _ in range(200):
            coords = [rng.randint(-50, 50) for _ in range(4)]
            if not any(coords):
                continue
            p = ProjPoint(coords)
            nz = [x for x in p.coords if x]
            assert nz[0] > 0
            g = 0
            for x in p.coords:
                g = gcd(g, x)
            assert g == 1


class TestDeltaLevel:
    def test_full_support(self):
        assert delta_level(ProjPoint([1, 1, 1])) == 2

    def test_one_zero(self):
        assert delta_level(ProjPoint([0, 3, 5])) == 1

    def test_coordinate_point(self):
        assert delta_level(ProjPoint([0, 0, 1])) == 0


class TestHadamardPoints:
    def test_identity_point(self):
        p = ProjPoint([2, 3, 5])
        assert hadamard_points(p, ProjPoint([1, 1, 1])) == p

    def test_forced_zeroes(self):
        r = hadamard_points(ProjPoint([0, 1, 2]), ProjPoint([1, 0, 3]))
        assert r == ProjPoint([0, 0, 1])

    def test_undefined(self):
        assert hadamard_points(ProjPoint([0, 1, 0]), ProjPoint([1, 0, 1])) is UNDEFINED

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            hadamard_points(ProjPoint([1, 2]), ProjPoint([1, 2, 3]))

    @given(coord_lists(3), coord_lists(3))
    def test_zero_coordinate_propagates(self, a, b):
        # a zero coordinate of either factor kills that product coordinate
        p, q = ProjPoint(a), ProjPoint(b)
        r = hadamard_points(p, q)
        for i in range(3):
            if p.coords[i] == 0 and r is not UNDEFINED:
                assert r.coords[i] == 0

    def test_cancellation_with_full_support_factor(self):
        rng = random.Random(11)
        for dim in (2, 3):
            for _ in range(100):
                a = ProjPoint([sampling.nonzero_int(rng, 20) for _ in range(dim + 1)])
                p = ProjPoint([rng.randint(-9, 9) or 1 for _ in range(dim + 1)])
                q = ProjPoint([rng.randint(-9, 9) or 1 for _ in range(dim + 1)])
                assert (hadamard_points(p, a) == hadamard_points(q, a)) == (p == q)


class TestPointHyperplaneProduct:
    def test_identity(self):
        h = Hyperplane([1, 1, 1])
        assert point_hyperplane_product(ProjPoint([1, 1, 1]), h) == h

    def test_coefficient_division(self):
        got = point_hyperplane_product(ProjPoint([1, 2, 3]), Hyperplane([6, 6, 6]))
        assert got == Hyperplane([6, 3, 2])

    def test_injectivity(self):
        rng = random.Random(23)
        h = Hyperplane([3, -5, 7, 11])
        for _ in range(100):
            p = ProjPoint([sampling.nonzero_int(rng, 15) for _ in range(4)])
            q = ProjPoint([sampling.nonzero_int(rng, 15) for _ in range(4)])
            lhs = point_hyperplane_product(p, h)
            rhs = point_hyperplane_product(q, h)
            assert (lhs == rhs) == (p == q)

    def test_stratum_errors(self):
        with pytest.raises(StratumError):
            point_hyperplane_product(ProjPoint([0, 1, 1]), Hyperplane([1, 1, 1]))
        with pytest.raises(StratumError):
            point_hyperplane_product(ProjPoint([1, 1, 1]), Hyperplane([0, 1, 1]))

    def test_duality_consistency(self):
        # products of points on H land on the product hyperplane
        rng = random.Random(37)
        for dim in (2, 3):
            done = 0
            while done < 100:
                h = Hyperplane([sampling.nonzero_int(rng, 12) for _ in range(dim + 1)])
                p = ProjPoint([sampling.nonzero_int(rng, 12) for _ in range(dim + 1)])
                basis = sampling.solution_basis([h.dual.coords], dim + 1)
                q = sampling.combine(basis, [rng.randint(-9, 9) for _ in basis])
                if q is None:
                    continue
                prod = hadamard_points(p, q)
                if prod is UNDEFINED:
                    continue
                assert point_hyperplane_product(p, h).contains(prod)
                done += 1


class TestHyperplaneProduct:
    def test_binomial_pair(self):
        h = Hyperplane([0, 3, 0, -2])
        k = Hyperplane([0, -7, 0, 4])
        assert hyperplane_product(h, k) == Hyperplane([0, 21, 0, -8])

    def test_binomial_square(self):
        h = Hyperplane([0, 3, 0, -2])
        assert hyperplane_product(h, h) == Hyperplane([0, 9, 0, -4])

    def test_coordinate_same(self):
        h1 = coordinate_hyperplane(1, 3)
        assert hyperplane_product(h1, Hyperplane([0, 5, 0, 0])) == h1

    def test_coordinate_distinct(self):
        got = hyperplane_product(coordinate_hyperplane(1, 3), coordinate_hyperplane(2, 3))
        assert isinstance(got, LinearSubspace)
        assert got.codim == 2
        assert [p.dual.coords for p in got.planes] == [(0, 1, 0, 0), (0, 0, 1, 0)]

    def test_mixed_coordinate_and_binomial(self):
        # one side may be a coordinate hyperplane when the other has
        # both coefficients nonzero
        got = hyperplane_product(Hyperplane([1, 0, 0, 0]), Hyperplane([2, -3, 0, 0]))
        assert got == Hyperplane([1, 0, 0, 0])

    def test_unsupported_shapes(self):
        with pytest.raises(UnsupportedShapeError):
            hyperplane_product(Hyperplane([1, 1, 1]), Hyperplane([1, 1, 1]))
        with pytest.raises(UnsupportedShapeError):
            hyperplane_product(Hyperplane([1, 1, 0, 0]), Hyperplane([0, 0, 1, 1]))

    def test_soundness_on_sampled_points(self):
        # products of points of H and K satisfy the returned equation
        rng = random.Random(41)
        for _ in range(50):
            i, j = sorted(rng.sample(range(4), 2))
            a = [0] * 4
            b = [0] * 4
            a[i], a[j] = sampling.nonzero_int(rng, 9), sampling.nonzero_int(rng, 9)
            b[i], b[j] = sampling.nonzero_int(rng, 9), rng.randint(-9, 9)
            h, k = Hyperplane(a), Hyperplane(b)
            prod = hyperplane_product(h, k)
            bh = sampling.solution_basis([h.dual.coords], 4)
            bk = sampling.solution_basis([k.dual.coords], 4)
            for _ in range(10):
                p = sampling.combine(bh, [rng.randint(-5, 5) for _ in bh])
                q = sampling.combine(bk, [rng.randint(-5, 5) for _ in bk])
                if p is None or q is None:
                    continue
                r = hadamard_points(p, q)
                if r is not UNDEFINED:
                    assert prod.contains(r)


class TestMembership:
    def test_linear(self):
        f = HomogeneousForm(3, {(1, 0, 0): 1, (0, 1, 0): -1})
        assert membership(ProjPoint([1, 1, 1]), f)
        assert not membership(ProjPoint([1, 2, 3]), f)

    def test_scaling_of_point_is_irrelevant(self):
        f = HomogeneousForm(3, {(2, 0, 0): 1, (0, 1, 1): -4})
        assert membership(ProjPoint([2, 1, 1]), f)
        assert membership(ProjPoint(["1", "1/2", "1/2"]), f)
        assert membership(ProjPoint([-6, -3, -3]), f)


class TestPointSet:
    def test_duplicates_rejected(self):
        with pytest.raises(HadaError):
            PointSet([ProjPoint([1, 2, 3]), ProjPoint([2, 4, 6])])

    def test_dedupe_and_products(self):
        xs = PointSet.from_coords([[1, 1, 1], [1, 2, 3]])
        ys = PointSet.from_coords([[1, 1, 1], [3, 2, 1]])
        prods, undefined = pairwise_products(xs, ys)
        assert undefined == 0
        assert len(prods) == 4
        assert ProjPoint([3, 4, 3]) in prods
