"""Lines, rank certificates, grids, quadrics and interpolation in P^3."""

import random
from fractions import Fraction

import pytest

from hada.errors import (
    GridConditionError,
    HadaError,
    MembershipError,
    SamplingError,
    StratumError,
)
from hada.forms import HomogeneousForm
from hada.projective import Hyperplane, PointSet, ProjPoint, pairwise_products
from hada.space import (
    Line3,
    Quadric3,
    generic_plane_pair,
    generic_skew_sample,
    grid_product_p3,
    line_intersection,
    point_line_product_p3,
    quadric_through,
    rank_condition,
    ruling_check,
    variety_product_interpolate,
)
from hada import sampling
from support import brute_products

L_A = Line3(Hyperplane([1, -1, 1, 2]), Hyperplane([1, 2, -1, 1]))
L_B = Line3(Hyperplane([1, 2, -2, 1]), Hyperplane([2, 2, 1, -4]))
X_A = PointSet.from_coords([[-2, 1, 1, 1], [-1, -1, -2, 1], [-3, 3, 4, 1]])
X_B = PointSet.from_coords([[-1, 2, 2, 1], [11, -8, -2, 1], [-7, 7, 4, 1]])

# lines meeting the two-zero locus but still satisfying the rank condition
L_C = Line3(Hyperplane([1, 2, 1, 1]), Hyperplane([1, 1, 1, -3]))
QUADRIC_B = (0, 10, 0, -120, -21, -30, 154, 0, -140, 1176)


class TestLine3:
    def test_rejects_proportional_planes(self):
        with pytest.raises(HadaError):
            Line3(Hyperplane([1, 2, 3, 4]), Hyperplane([2, 4, 6, 8]))

    def test_equality_is_geometric(self):
        l1 = Line3(Hyperplane([1, 0, 0, 0]), Hyperplane([0, 1, 0, 0]))
        l2 = Line3(
            Hyperplane([1, 1, 0, 0]), Hyperplane([1, -1, 0, 0])
        )  # same pencil, different pair
        assert l1 == l2

    def test_membership_and_basis(self):
        for p in X_A:
            assert L_A.contains(p)
        b1, b2 = L_A.basis_points()
        assert L_A.contains(b1) and L_A.contains(b2)

    def test_two_zero_locus_detection(self):
        assert not L_C.avoids_two_zero_locus()
        assert L_B.avoids_two_zero_locus()


class TestPointLineProduct3:
    def test_identity(self):
        assert point_line_product_p3(ProjPoint([1, 1, 1, 1]), L_A) == L_A

    def test_planewise_division(self):
        got = point_line_product_p3(ProjPoint([-2, 1, 1, 1]), L_B)
        assert got.h == Hyperplane(
            [Fraction(1, -2), Fraction(2), Fraction(-2), Fraction(1)]
        )
        assert got.k == Hyperplane(
            [Fraction(2, -2), Fraction(2), Fraction(1), Fraction(-4)]
        )

    def test_products_land_on_both_planes(self):
        rng = random.Random(97)
        basis = L_B.basis_points()
        p = ProjPoint([3, -2, 5, 7])
        got = point_line_product_p3(p, L_B)
        from hada.projective import UNDEFINED, hadamard_points

        prods = []
        for w in sampling.FIXED_WEIGHTS:
            s = sampling.combine(basis, w)
            if s is None:
                continue
            r = hadamard_points(p, s)
            if r is not UNDEFINED:
                prods.append(r)
                assert got.contains(r)
        from hada import linalg

        assert linalg.rank_of([r.coords for r in prods], 4) == 2

    def test_stratum_check(self):
        with pytest.raises(StratumError):
            point_line_product_p3(ProjPoint([0, 1, 1, 1]), L_A)


class TestRankCondition:
    def test_duplicated_rows_rank_two(self):
        p = ProjPoint([-2, 1, 1, 1])
        cert = rank_condition(L_A, L_A, p, p)
        assert cert.rank == 2

    def test_all_nine_pairs_rank_three(self):
        for p in X_A:
            for q in X_B:
                assert rank_condition(L_A, L_B, p, q).rank == 3

    def test_rank_never_four_on_valid_input(self):
        rng = random.Random(103)
        for seed in range(10):
            line, line2, xs, xs2 = generic_skew_sample(2, 2, seed)
            for p in xs:
                for q in xs2:
                    assert rank_condition(line, line2, p, q).rank in (2, 3)

    def test_membership_enforced(self):
        with pytest.raises(MembershipError):
            rank_condition(L_A, L_B, ProjPoint([1, 1, 1, 1]), X_B.points[0])


class TestGrid3:
    def test_three_by_three(self):
        g = grid_product_p3(X_A, X_B, L_A, L_B)
        assert len(g.points) == 9
        assert g.points == brute_products(X_A, X_B)
        for i in range(3):
            for j in range(3):
                meet = line_intersection(g.row_lines[i], g.col_lines[j])
                assert meet == g.point_at(i, j)

    def test_strata_meeting_lines_still_grid(self):
        x = PointSet.from_coords([[4, -4, 3, 1], [6, -4, 1, 1], [5, -4, 2, 1]])
        g = grid_product_p3(x, X_B, L_C, L_B)
        assert len(g.points) == 9

    def test_single_pair(self):
        xs = PointSet.from_coords([[-2, 1, 1, 1]])
        ys = PointSet.from_coords([[-1, 2, 2, 1]])
        g = grid_product_p3(xs, ys, L_A, L_B)
        assert len(g.points) == 1
        assert g.point_at(0, 0) == ProjPoint([2, 2, 2, 1])

    def test_bad_duals_fail_with_products_attached(self):
        # planar configuration: plane duals carry zero coordinates
        line = Line3(Hyperplane([0, 1, 0, -1]), Hyperplane([14, 0, -27, 10]))
        line2 = Line3(Hyperplane([0, 9, 5, -11]), Hyperplane([1, 0, -1, 0]))
        xs = PointSet.from_coords(
            [[1, 4, 2, 4], [8, 5, 6, 5], [37, 40, 34, 40], [9, 9, 8, 9], [65, 98, 70, 98]]
        )
        ys = PointSet.from_coords(
            [[2, 5, 2, 5], [3, 2, 3, 3], [24, 27, 24, 33], [13, 16, 13, 19], [130, 127, 130, 163]]
        )
        with pytest.raises(GridConditionError) as exc:
            grid_product_p3(xs, ys, line, line2)
        assert exc.value.products is not None
        assert len(exc.value.products) == 25  # the relaxed instance is still a
        assert exc.value.expected == 25  # full-size product set


class TestQuadric:
    def test_unique_quadric_through_grid(self):
        g = grid_product_p3(
            PointSet.from_coords([[4, -4, 3, 1], [6, -4, 1, 1], [5, -4, 2, 1]]),
            X_B,
            L_C,
            L_B,
        )
        q = quadric_through(g.points)
        assert isinstance(q, Quadric3)
        assert q.form.coefficient_vector() == QUADRIC_B
        assert q.is_nondegenerate()
        from hada.forms import membership

        assert all(membership(p, q.form) for p in g.points)

    def test_three_points_non_unique(self):
        assert quadric_through(X_A) == "non-unique"

    def test_ten_generic_points_none(self):
        rng = random.Random(107)
        pts = PointSet.from_coords(
            [[rng.randint(1, 100), rng.randint(1, 100), rng.randint(1, 100), 1]
             for _ in range(10)]
        )
        assert quadric_through(pts) == "none"

    def test_symmetric_matrix_halves_cross_terms(self):
        q = Quadric3(HomogeneousForm(4, {(1, 1, 0, 0): 3, (0, 0, 2, 0): 4}))
        m = q.symmetric_matrix()
        assert m[0][1] == Fraction(3, 2) == m[1][0]
        assert m[2][2] == 4


class TestRulingCheck:
    def grid(self):
        return grid_product_p3(
            PointSet.from_coords([[4, -4, 3, 1], [6, -4, 1, 1], [5, -4, 2, 1]]),
            X_B,
            L_C,
            L_B,
        )

    def test_valid_configuration_passes(self):
        g = self.grid()
        q = quadric_through(g.points)
        rep = ruling_check(q, g.row_lines, g.col_lines)
        assert rep.ok
        assert rep.determinant != 0

    def test_duplicate_row_line_reported(self):
        g = self.grid()
        q = quadric_through(g.points)
        rep = ruling_check(q, (g.row_lines[0],) * 2, g.col_lines)
        assert any("not disjoint" in v or "coincide" in v for v in rep.violations)

    def test_degenerate_quadric_reported(self):
        q = Quadric3(HomogeneousForm(4, {(2, 0, 0, 0): 1}))
        l1 = Line3(Hyperplane([1, 0, 0, 0]), Hyperplane([0, 1, 0, 0]))
        l2 = Line3(Hyperplane([1, 0, 0, 0]), Hyperplane([0, 0, 1, 0]))
        rep = ruling_check(q, (l1,), (l2,))
        assert any("degenerate" in v for v in rep.violations)


EXPECTED_D2_C = (0, 0, 0, 60, 0, 9, -105, 0, 84, -980)


class TestInterpolation:
    def test_strata_meeting_pair_recovers_quadric(self):
        forms = variety_product_interpolate(L_C, L_B, 2, seed=11)
        assert len(forms) == 1
        assert forms[0].coefficient_vector() == QUADRIC_B

    def test_double_strata_pair(self):
        line2 = Line3(Hyperplane([1, 1, -2, 1]), Hyperplane([1, 1, 1, -4]))
        forms = variety_product_interpolate(L_C, line2, 2, seed=13)
        assert len(forms) == 1
        assert forms[0].coefficient_vector() == EXPECTED_D2_C

    def test_coordinate_axis_line(self):
        axis = Line3(Hyperplane([0, 0, 1, 0]), Hyperplane([0, 0, 0, 1]))
        forms = variety_product_interpolate(axis, axis, 1, seed=5)
        vectors = sorted(f.coefficient_vector() for f in forms)
        assert vectors == [(0, 0, 0, 1), (0, 0, 1, 0)]

    def test_seed_stability(self):
        one = variety_product_interpolate(L_A, L_B, 2, seed=3)
        two = variety_product_interpolate(L_A, L_B, 2, seed=4444)
        assert [f.coefficient_vector() for f in one] == [
            f.coefficient_vector() for f in two
        ]

    def test_sample_floor(self):
        with pytest.raises(HadaError):
            variety_product_interpolate(L_A, L_B, 2, samples=10)


class TestPlanePairChooser:
    def test_rebuilds_full_support_duals(self):
        line = Line3(Hyperplane([0, 1, 0, -1]), Hyperplane([14, 0, -27, 10]))
        fixed = generic_plane_pair(line)
        assert fixed == line
        for d in fixed.duals:
            assert d.delta_level == 3

    def test_many_random_lines(self):
        rng = random.Random(109)
        for _ in range(50):
            h = Hyperplane([rng.randint(-9, 9) or 1 for _ in range(4)])
            k = Hyperplane([rng.randint(-9, 9) or 1 for _ in range(4)])
            if h == k:
                continue
            line = Line3(h, k)
            if line.meets_coordinate_points():
                continue
            fixed = generic_plane_pair(line)
            assert fixed == line
            assert all(d.delta_level == 3 for d in fixed.duals)

    def test_impossible_when_coordinate_point_on_line(self):
        axis = Line3(Hyperplane([1, 0, 0, 0]), Hyperplane([0, 1, 0, 0]))
        with pytest.raises(StratumError):
            generic_plane_pair(axis)


class TestCoplanarContrapositive:
    def test_meeting_row_lines_force_coplanarity(self):
        # planar product instance: after replanning, the row lines meet
        # pairwise and every product lies in one plane
        line = generic_plane_pair(
            Line3(Hyperplane([0, 1, 0, -1]), Hyperplane([14, 0, -27, 10]))
        )
        line2 = generic_plane_pair(
            Line3(Hyperplane([0, 9, 5, -11]), Hyperplane([1, 0, -1, 0]))
        )
        xs = PointSet.from_coords(
            [[1, 4, 2, 4], [8, 5, 6, 5], [37, 40, 34, 40], [9, 9, 8, 9], [65, 98, 70, 98]]
        )
        ys = PointSet.from_coords(
            [[2, 5, 2, 5], [3, 2, 3, 3], [24, 27, 24, 33], [13, 16, 13, 19], [130, 127, 130, 163]]
        )
        rows = [point_line_product_p3(p, line2) for p in xs]
        meets = [
            line_intersection(rows[i], rows[j])
            for i in range(len(rows))
            for j in range(i + 1, len(rows))
        ]
        assert any(m is not None for m in meets)
        products, _ = pairwise_products(xs, ys)
        from hada import linalg

        assert linalg.rank_of([p.coords for p in products], 4) == 3


class TestGenericSkewSample:
    def test_deterministic(self):
        a = generic_skew_sample(3, 3, 17)
        b = generic_skew_sample(3, 3, 17)
        assert a[0] == b[0] and a[1] == b[1]
        assert a[2] == b[2] and a[3] == b[3]

    def test_hypotheses_hold(self):
        line, line2, xs, xs2 = generic_skew_sample(3, 4, 23)
        assert line.avoids_two_zero_locus() and line2.avoids_two_zero_locus()
        for d in line.duals + line2.duals:
            assert d.delta_level == 3
        for p in xs:
            assert line.contains(p) and p.delta_level == 3
        for p in xs2:
            assert line2.contains(p) and p.delta_level == 3
        for p in xs:
            for q in xs2:
                assert rank_condition(line, line2, p, q).rank == 3
