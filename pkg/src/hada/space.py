"""Lines, grids and quadrics in projective 3-space.

A line is stored as an ordered pair of planes, because every
hypothesis in this part of the theory is phrased through the dual
points of those planes.  Products of a point with a line intersect the
two transformed planes; products of two finite collinear sets form a
grid exactly when a 4x4 rank condition holds for every cross pair, and
the grid then lies on a quadric carrying the two rulings of product
lines.  The quadric itself is recovered by exact interpolation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from . import linalg, sampling
from .errors import (
    DimensionMismatch,
    GridConditionError,
    HadaError,
    InterpolationError,
    MembershipError,
    SamplingError,
    StratumError,
)
from .forms import HomogeneousForm, evaluate_monomial, monomial_count, monomials
from .projective import (
    UNDEFINED,
    Hyperplane,
    PointSet,
    ProjPoint,
    hadamard_points,
    pairwise_products,
    point_hyperplane_product,
)


class Line3:
    """A line in P^3 as an ordered pair of distinct planes."""

    __slots__ = ("h", "k")

    def __init__(self, h: Hyperplane, k: Hyperplane):
        if h.ambient_dim != 3 or k.ambient_dim != 3:
            raise DimensionMismatch("plane pair must live in P^3")
        if linalg.rank_of([h.dual.coords, k.dual.coords], 4) != 2:
            raise HadaError("planes coincide; they do not cut out a line")
        self.h = h
        self.k = k

    @property
    def duals(self) -> tuple[ProjPoint, ProjPoint]:
        return self.h.dual, self.k.dual

    def contains(self, p: ProjPoint) -> bool:
        return self.h.contains(p) and self.k.contains(p)

    def basis_points(self) -> tuple[ProjPoint, ProjPoint]:
        b = sampling.solution_basis([self.h.dual.coords, self.k.dual.coords], 4)
        return b[0], b[1]

    def canonical_key(self):
        """Key identifying the line independently of the plane pair."""
        _, _, red = linalg.rref_of([self.h.dual.coords, self.k.dual.coords], 4)
        return tuple(red)

    def meets_coordinate_points(self) -> bool:
        a, b = self.h.dual.coords, self.k.dual.coords
        return any(a[i] == 0 and b[i] == 0 for i in range(4))

    def avoids_two_zero_locus(self) -> bool:
        """True when no point of the line has two zero coordinates,
        i.e. all six 2x2 minors of the dual matrix are nonzero."""
        a, b = self.h.dual.coords, self.k.dual.coords
        for i in range(4):
            for j in range(i + 1, 4):
                if a[i] * b[j] - a[j] * b[i] == 0:
                    return False
        return True

    def __eq__(self, other):
        if not isinstance(other, Line3):
            return NotImplemented
        return self.canonical_key() == other.canonical_key()

    def __hash__(self):
        return hash(self.canonical_key())

    def __repr__(self):
        return f"Line3({self.h!r}, {self.k!r})"


def line_intersection(l1: Line3, l2: Line3):
    """Common point of two lines: a point, None when disjoint, or the
    whole line when they coincide."""
    rows = [
        l1.h.dual.coords,
        l1.k.dual.coords,
        l2.h.dual.coords,
        l2.k.dual.coords,
    ]
    basis = linalg.kernel_basis(rows, 4)
    if not basis:
        return None
    if len(basis) == 1:
        return ProjPoint(basis[0])
    return l1


def point_line_product_p3(p: ProjPoint, line: Line3) -> Line3:
    """Product of a point with a line: intersection of the two
    transformed planes.  Needs every coordinate of the point and every
    coefficient of both planes nonzero."""
    if p.ambient_dim != 3:
        raise DimensionMismatch("point must live in P^3")
    if p.delta_level < 3:
        raise StratumError(f"point {p} has a zero coordinate")
    return Line3(
        point_hyperplane_product(p, line.h),
        point_hyperplane_product(p, line.k),
    )


@dataclass(frozen=True)
class RankCertificate:
    """The stacked coordinatewise products (A*P, B*P, A'*P', B'*P') and
    their exact rank."""

    rows: tuple[tuple[int, ...], ...]
    rank: int


def rank_condition(
    line: Line3, line2: Line3, p: ProjPoint, p2: ProjPoint
) -> RankCertificate:
    """Exact rank of the 4x4 matrix deciding whether the two product
    lines through P and P' are distinct (rank 3) or equal (rank 2)."""
    for nm, l, q in (("first", line, p), ("second", line2, p2)):
        for d in l.duals:
            if d.delta_level < 3:
                raise StratumError(f"{nm} line: plane dual {d} has a zero coordinate")
        if not l.contains(q):
            raise MembershipError(f"{nm} line does not contain {q}")
        if q.delta_level < 3:
            raise StratumError(f"point {q} has a zero coordinate")
    a, b = line.duals
    a2, b2 = line2.duals
    rows = []
    for dual, pt in ((a, p), (b, p), (a2, p2), (b2, p2)):
        rows.append(tuple(x * y for x, y in zip(dual.coords, pt.coords)))
    return RankCertificate(rows=tuple(rows), rank=linalg.rank_of(rows, 4))


@dataclass(frozen=True)
class GridResult3:
    """Grid of products in P^3 with its two families of product lines.
    ``point_grid[i][j]`` is the product of the i-th point of the first
    set with the j-th point of the second."""

    points: PointSet
    row_lines: tuple[Line3, ...]
    col_lines: tuple[Line3, ...]
    point_grid: tuple[tuple[ProjPoint, ...], ...]

    def point_at(self, i: int, j: int) -> ProjPoint:
        return self.point_grid[i][j]


def grid_product_p3(
    xs: PointSet, xs2: PointSet, line: Line3, line2: Line3
) -> GridResult3:
    """Product of two collinear sets in P^3 as a full grid.

    All hypotheses are checked exactly; a failure raises
    GridConditionError naming the witness and carrying the brute-force
    product set so relaxed instances can still be inspected.
    """
    products, _ = pairwise_products(xs, xs2)
    expected = len(xs) * len(xs2)

    def fail(msg, witness=None):
        raise GridConditionError(
            msg, witness=witness, products=products, expected=expected
        )

    for nm, l, pts in (("first", line, xs), ("second", line2, xs2)):
        for d in l.duals:
            if d.delta_level < 3:
                fail(f"{nm} line: plane dual {d} has a zero coordinate", witness=d)
        for p in pts:
            if not l.contains(p):
                fail(f"{nm} set: point {p} is off its line", witness=p)
            if p.delta_level < 3:
                fail(f"{nm} set: point {p} has a zero coordinate", witness=p)
    for p in xs:
        if p in xs2:
            fail(f"point {p} belongs to both sets", witness=p)
    for p in xs:
        for p2 in xs2:
            cert = rank_condition(line, line2, p, p2)
            if cert.rank <= 2:
                fail(
                    f"rank condition fails at {p}, {p2} (rank {cert.rank})",
                    witness=(p, p2),
                )

    if len(products) != expected:
        fail("product set is smaller than the grid size")
    row_lines = tuple(point_line_product_p3(p, line2) for p in xs)
    col_lines = tuple(point_line_product_p3(p2, line) for p2 in xs2)
    if len({l.canonical_key() for l in row_lines}) != len(row_lines):
        fail("row lines are not pairwise distinct")
    if len({l.canonical_key() for l in col_lines}) != len(col_lines):
        fail("column lines are not pairwise distinct")
    grid_rows = []
    for i, p in enumerate(xs):
        row = []
        for j, p2 in enumerate(xs2):
            pt = hadamard_points(p, p2)
            meet = line_intersection(row_lines[i], col_lines[j])
            if not isinstance(meet, ProjPoint) or meet != pt:
                fail(
                    f"row {i} and column {j} do not meet exactly in the "
                    f"product point {pt}",
                    witness=(p, p2),
                )
            row.append(pt)
        grid_rows.append(tuple(row))
    return GridResult3(
        points=products,
        row_lines=row_lines,
        col_lines=col_lines,
        point_grid=tuple(grid_rows),
    )


class Quadric3:
    """A quadric surface in P^3 with its symmetric coefficient matrix."""

    __slots__ = ("form",)

    def __init__(self, form: HomogeneousForm):
        if form.nvars != 4 or form.degree != 2:
            raise HadaError("not a quadric in four variables")
        self.form = form

    def symmetric_matrix(self):
        m = [[Fraction(0)] * 4 for _ in range(4)]
        for expo, c in self.form.coeffs.items():
            idx = [i for i, e in enumerate(expo) if e]
            if len(idx) == 1:
                i = idx[0]
                m[i][i] = Fraction(c)
            else:
                i, j = idx
                m[i][j] = m[j][i] = Fraction(c, 2)
        return m

    def determinant(self) -> Fraction:
        # doubling the matrix clears the halves; det scales by 2^4
        m = self.symmetric_matrix()
        rows = [[int(2 * m[i][j]) for j in range(4)] for i in range(4)]
        return Fraction(linalg.det_of(rows), 16)

    def is_nondegenerate(self) -> bool:
        return self.determinant() != 0

    def contains_point(self, p: ProjPoint) -> bool:
        return self.form.vanishes_at(p)

    def contains_line(self, line: Line3) -> bool:
        # a degree-2 form vanishing at three points of a line vanishes
        # on the whole line
        b1, b2 = line.basis_points()
        third = sampling.combine([b1, b2], (1, 1))
        pts = [b1, b2] + ([third] if third is not None else [])
        return all(self.form.vanishes_at(p) for p in pts)

    def __eq__(self, other):
        if not isinstance(other, Quadric3):
            return NotImplemented
        return self.form == other.form

    def __repr__(self):
        return f"Quadric3({self.form!r})"


def quadric_through(points: PointSet) -> Union[Quadric3, str]:
    """The quadric through a point set when it is unique.

    Returns "none" when no quadric contains the set and "non-unique"
    when the space of such quadrics has dimension at least two.
    """
    if points.ambient_dim != 3:
        raise DimensionMismatch("quadrics live in P^3")
    monos = monomials(4, 2)
    rows = [
        [evaluate_monomial(e, p.coords) for e in monos] for p in points
    ]
    basis = linalg.kernel_basis(rows, len(monos))
    if not basis:
        return "none"
    if len(basis) > 1:
        return "non-unique"
    return Quadric3(HomogeneousForm.from_vector(4, 2, basis[0]))


@dataclass(frozen=True)
class RulingReport:
    """Outcome of the quadric/ruling verification; empty violation list
    means every check passed."""

    violations: tuple[str, ...]
    determinant: Fraction

    @property
    def ok(self) -> bool:
        return not self.violations


def ruling_check(quadric: Quadric3, rows, cols) -> RulingReport:
    """Verify a grid's line families against a quadric.

    Checks: every line lies on the quadric; same-family lines are
    pairwise disjoint; cross-family pairs meet in exactly one point;
    the quadric is non-degenerate.
    """
    violations = []
    for fam, lines in (("row", rows), ("column", cols)):
        for i, l in enumerate(lines):
            if not quadric.contains_line(l):
                violations.append(f"{fam} line {i} does not lie on the quadric")
    for fam, lines in (("row", rows), ("column", cols)):
        for i in range(len(lines)):
            for j in range(i + 1, len(lines)):
                meet = line_intersection(lines[i], lines[j])
                if meet is not None:
                    violations.append(f"{fam} lines {i} and {j} are not disjoint")
    for i, r in enumerate(rows):
        for j, c in enumerate(cols):
            meet = line_intersection(r, c)
            if meet is None:
                violations.append(f"row {i} and column {j} do not meet")
            elif not isinstance(meet, ProjPoint):
                violations.append(f"row {i} and column {j} coincide")
    determinant = quadric.determinant()
    if determinant == 0:
        violations.append("quadric is degenerate (zero determinant)")
    return RulingReport(violations=tuple(violations), determinant=determinant)


def generic_plane_pair(line: Line3) -> Line3:
    """Replace the plane pair of a line by one whose duals have full
    support, searching the pencil through the line.

    Each coordinate rules out at most one ratio, so a fixed list of
    small weights always contains two suitable independent planes, as
    long as no coordinate point lies on the line.
    """
    if line.meets_coordinate_points():
        raise StratumError(
            "a coordinate point lies on the line; every plane through it "
            "has a zero coefficient"
        )
    a, b = line.duals
    good = []
    for lam, mu in sampling.FIXED_WEIGHTS:
        coords = [lam * x + mu * y for x, y in zip(a.coords, b.coords)]
        if all(coords):
            good.append(Hyperplane(coords))
            if len(good) == 2:
                return Line3(good[0], good[1])
    raise SamplingError("pencil search exhausted without two full-support planes")


def variety_product_interpolate(
    line: Line3,
    line2: Line3,
    degree: int,
    samples: Optional[int] = None,
    seed: int = 0,
):
    """Degree-bounded implicitization of the product of two lines.

    Seeded rational points are sampled on both lines, their pairwise
    products fitted by an exact kernel computation, and the fitted
    forms re-checked on a disjoint batch of products; any nonzero value
    there means the kernel was an artifact of the sample and an error
    is raised.  Returns the (possibly empty) canonical basis of forms
    of the given degree vanishing on the product.
    """
    if degree < 1:
        raise HadaError("degree must be positive")
    count = monomial_count(4, degree)
    if samples is None:
        samples = 3 * count
    if samples < 2 * count:
        raise HadaError(f"need at least {2 * count} samples for degree {degree}")
    rng = random.Random(seed)
    basis = line.basis_points()
    basis2 = line2.basis_points()
    products = []
    seen = set()
    attempts = 0
    while len(products) < samples:
        attempts += 1
        if attempts > 50 * samples:
            raise SamplingError("could not sample enough defined products")
        p = sampling.sample_point(rng, basis)
        p2 = sampling.sample_point(rng, basis2)
        r = hadamard_points(p, p2)
        if r is UNDEFINED or r.coords in seen:
            continue
        seen.add(r.coords)
        products.append(r)
    n_verify = samples // 3
    fit, verify = products[: samples - n_verify], products[samples - n_verify :]
    monos = monomials(4, degree)
    rows = [[evaluate_monomial(e, p.coords) for e in monos] for p in fit]
    kernel = linalg.kernel_basis(rows, len(monos))
    forms = [HomogeneousForm.from_vector(4, degree, v) for v in kernel]
    for f in forms:
        for p in verify:
            if not f.vanishes_at(p):
                raise InterpolationError(
                    "sample-dependent kernel; increase samples"
                )
    return forms


def generic_skew_sample(n: int, m: int, seed: int):
    """Seeded generic instance: two lines avoiding the two-zero locus
    with full-support plane duals, and point sets satisfying every grid
    hypothesis (membership, no zero coordinates, disjointness, rank
    condition on all cross pairs).

    Returns ``(line, line2, xs, xs2)``.  Deterministic for fixed seed.
    """
    rng = random.Random(seed)

    def random_line():
        for _ in range(500):
            h = Hyperplane([sampling.nonzero_int(rng, 20) for _ in range(4)])
            k = Hyperplane([sampling.nonzero_int(rng, 20) for _ in range(4)])
            if h == k:
                continue
            l = Line3(h, k)
            if l.avoids_two_zero_locus():
                return l
        raise SamplingError("no generic line found")

    for _ in range(100):
        line = random_line()
        line2 = random_line()
        if line == line2:
            continue
        basis = line.basis_points()
        basis2 = line2.basis_points()
        try:
            first: list[ProjPoint] = []
            while len(first) < n:
                p = sampling.sample_point(
                    rng,
                    basis,
                    lambda p: p.delta_level == 3 and all(p != q for q in first),
                )
                first.append(p)

            second: list[ProjPoint] = []

            def ok(p2):
                if p2.delta_level < 3:
                    return False
                if any(p2 == q for q in second) or any(p2 == q for q in first):
                    return False
                return all(
                    rank_condition(line, line2, p, p2).rank > 2 for p in first
                )

            while len(second) < m:
                second.append(sampling.sample_point(rng, basis2, ok))
            return line, line2, PointSet(first), PointSet(second)
        except SamplingError:
            continue
    raise SamplingError("no generic instance found")
