"""Hilbert functions and ideal invariants of finite point sets.

Everything reduces to exact linear algebra on evaluation matrices: the
value of the Hilbert function in degree t is the rank of the matrix of
all degree-t monomials evaluated at the points, the degree-t part of
the vanishing ideal is its kernel, and minimal generator counts come
from comparing each degree with the span of (variables times previous
degree).  No Groebner machinery is involved; for finite point sets the
evaluation matrix is the definition.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

from . import linalg
from .errors import HadaError
from .forms import HomogeneousForm, evaluate_monomial, monomials
from .projective import PointSet


def evaluation_rows(points: PointSet, degree: int):
    monos = monomials(points.ambient_dim + 1, degree)
    return [[evaluate_monomial(e, p.coords) for e in monos] for p in points]


def hilbert_function(points: PointSet, t: int) -> int:
    """Rank of the degree-t evaluation matrix."""
    if t < 0:
        raise HadaError("degree must be nonnegative")
    n = points.ambient_dim
    return linalg.rank_of(evaluation_rows(points, t), comb(t + n, n))


@dataclass(frozen=True)
class HilbertProfile:
    """Hilbert function values through stabilization.

    ``values[t]`` holds HF(t) for t = 0 .. tau + 1, ``tau`` is the
    least degree where the value reaches the cardinality, and
    ``h_vector`` is the sequence of first differences up to tau (its
    entries sum to the cardinality).
    """

    values: tuple[int, ...]
    tau: int
    h_vector: tuple[int, ...]
    cardinality: int


def hilbert_profile(points: PointSet) -> HilbertProfile:
    card = len(points)
    values = []
    t = 0
    while True:
        v = hilbert_function(points, t)
        values.append(v)
        if v == card:
            tau = t
            break
        if t > 0 and v <= values[t - 1]:
            raise HadaError("Hilbert function failed to increase strictly")
        t += 1
    values.append(hilbert_function(points, tau + 1))
    h_vector = [values[0]] + [values[i] - values[i - 1] for i in range(1, tau + 1)]
    return HilbertProfile(
        values=tuple(values),
        tau=tau,
        h_vector=tuple(h_vector),
        cardinality=card,
    )


@dataclass(frozen=True)
class HFProductRow:
    degree: int
    product_value: int
    left_value: int
    right_value: int

    @property
    def ok(self) -> bool:
        return self.product_value == self.left_value * self.right_value


@dataclass(frozen=True)
class HFProductReport:
    """Degree-by-degree comparison of HF(product set) with the product
    of the factor Hilbert functions, plus the regularity check when the
    factors have equal size."""

    rows: tuple[HFProductRow, ...]
    tau_product: int
    tau_expected: Optional[int]

    @property
    def product_holds(self) -> bool:
        return all(r.ok for r in self.rows)

    @property
    def tau_matches(self) -> Optional[bool]:
        if self.tau_expected is None:
            return None
        return self.tau_product == self.tau_expected

    @property
    def ok(self) -> bool:
        return self.product_holds and self.tau_matches in (None, True)


def hf_product_check(
    xs: PointSet, xs2: PointSet, product_set: PointSet
) -> HFProductReport:
    profile = hilbert_profile(product_set)
    rows = []
    for t in range(profile.tau + 2):
        rows.append(
            HFProductRow(
                degree=t,
                product_value=profile.values[t],
                left_value=hilbert_function(xs, t),
                right_value=hilbert_function(xs2, t),
            )
        )
    tau_expected = len(xs) - 1 if len(xs) == len(xs2) else None
    return HFProductReport(
        rows=tuple(rows), tau_product=profile.tau, tau_expected=tau_expected
    )


def ideal_dimension(points: PointSet, t: int) -> int:
    """Dimension of the degree-t part of the vanishing ideal."""
    n = points.ambient_dim
    return comb(t + n, n) - hilbert_function(points, t)


def degree_bounded_ideal(points: PointSet, t: int):
    """Canonical basis of the degree-t forms vanishing on the set."""
    if t < 0:
        raise HadaError("degree must be nonnegative")
    nvars = points.ambient_dim + 1
    monos = monomials(nvars, t)
    kernel = linalg.kernel_basis(evaluation_rows(points, t), len(monos))
    return [HomogeneousForm.from_vector(nvars, t, v) for v in kernel]


@dataclass(frozen=True)
class GeneratorDegree:
    degree: int
    ideal_dim: int
    new_generators: int


@dataclass(frozen=True)
class GeneratorProfile:
    """Minimal generator counts of the vanishing ideal, degree by
    degree, through ``max_degree``."""

    entries: tuple[GeneratorDegree, ...]
    max_degree: int

    @property
    def total(self) -> int:
        return sum(e.new_generators for e in self.entries)

    def witness_degrees(self) -> tuple[int, ...]:
        out = []
        for e in self.entries:
            out.extend([e.degree] * e.new_generators)
        return tuple(out)

    def new_in_degree(self, t: int) -> int:
        for e in self.entries:
            if e.degree == t:
                return e.new_generators
        return 0


def _shift_vector(vector, monos_from, index_of, nvars, var):
    out = [0] * len(index_of)
    for coeff, expo in zip(vector, monos_from):
        if coeff:
            e = list(expo)
            e[var] += 1
            out[index_of[tuple(e)]] += coeff
    return out


def generator_profile(points: PointSet, max_degree: Optional[int] = None):
    """Count minimal generators per degree.

    New generators in degree t are the gap between the degree-t part of
    the ideal and the span of (variable times degree t-1 part), both
    computed as exact ranks.  Ideals of finite point sets are generated
    in degrees up to tau + 1, the default bound.
    """
    nvars = points.ambient_dim + 1
    if max_degree is None:
        max_degree = hilbert_profile(points).tau + 1
    entries = []
    prev_kernel: list = []
    prev_monos = None
    for t in range(max_degree + 1):
        monos = monomials(nvars, t)
        dim_t = len(monos) - linalg.rank_of(evaluation_rows(points, t), len(monos))
        if t == 0 or not prev_kernel:
            span_rank = 0
        else:
            index_of = {e: i for i, e in enumerate(monos)}
            span_rows = [
                _shift_vector(v, prev_monos, index_of, nvars, var)
                for v in prev_kernel
                for var in range(nvars)
            ]
            span_rank = linalg.rank_of(span_rows, len(monos))
        entries.append(
            GeneratorDegree(
                degree=t, ideal_dim=dim_t, new_generators=dim_t - span_rank
            )
        )
        prev_kernel = linalg.kernel_basis(evaluation_rows(points, t), len(monos))
        prev_monos = monos
    return GeneratorProfile(entries=tuple(entries), max_degree=max_degree)


@dataclass(frozen=True)
class CIVerdict:
    """Complete-intersection verdict for a finite point set."""

    kind: str  # "CI" | "NotCI" | "Unknown"
    codimension: int
    total_generators: Optional[int] = None
    witness_degrees: Optional[tuple[int, ...]] = None
    reason: Optional[str] = None


def ci_verdict(points: PointSet, max_degree: Optional[int] = None) -> CIVerdict:
    """A set of points is a complete intersection exactly when its
    ideal needs only codimension-many generators."""
    n = points.ambient_dim
    profile = hilbert_profile(points)
    bound = profile.tau + 1
    if max_degree is not None and max_degree < bound:
        return CIVerdict(
            kind="Unknown",
            codimension=n,
            reason=(
                f"degree bound {max_degree} is below {bound}; generator "
                "count incomplete"
            ),
        )
    gens = generator_profile(points, max_degree or bound)
    total = gens.total
    if total == n:
        return CIVerdict(
            kind="CI",
            codimension=n,
            total_generators=total,
            witness_degrees=gens.witness_degrees(),
        )
    symmetric = profile.h_vector == tuple(reversed(profile.h_vector))
    reason = f"{total} minimal generators exceed the codimension {n}"
    if not symmetric:
        reason += "; h-vector is not symmetric"
    return CIVerdict(
        kind="NotCI",
        codimension=n,
        total_generators=total,
        witness_degrees=gens.witness_degrees(),
        reason=reason,
    )
