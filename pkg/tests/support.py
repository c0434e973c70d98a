"""Shared helpers for the test suite: independent oracles and seeded
instance generators.  Everything here deliberately avoids the code
paths under test (rank via Fraction Gaussian elimination, product
outcomes via point sampling) so the main library is checked against
genuinely independent computations."""

from __future__ import annotations

import random
from fractions import Fraction

from hada.projective import (
    UNDEFINED,
    Hyperplane,
    PointSet,
    ProjPoint,
    hadamard_points,
)
from hada import sampling
from hada.plane import line_through


def frac_rref(rows, ncols):
    """Textbook Gaussian elimination over Fraction; independent of the
    integer kernels under test."""
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    pivots = []
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pv = m[rank][c]
        m[rank] = [x / pv for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        pivots.append(c)
        rank += 1
    return rank, pivots, m[:rank]


def frac_rank(rows, ncols):
    return frac_rref(rows, ncols)[0]


def random_point_with_level(rng: random.Random, level: int, dim: int = 2) -> ProjPoint:
    support = rng.sample(range(dim + 1), level + 1)
    coords = [0] * (dim + 1)
    for i in support:
        coords[i] = sampling.nonzero_int(rng, 9)
    return ProjPoint(coords)


def line_samples(line: Hyperplane, count: int = 12):
    basis = sampling.solution_basis([line.dual.coords], line.ambient_dim + 1)
    return sampling.fixed_line_samples(basis, count=count)


def check_point_line_outcome(q: ProjPoint, line: Hyperplane, outcome) -> None:
    """Sampling oracle: multiply >= 5 points of the line by q and check
    they land exactly in the claimed outcome; for a full line the
    samples must span it."""
    samples = line_samples(line)
    assert len(samples) >= 5
    products = []
    for p in samples:
        r = hadamard_points(q, p)
        if r is not UNDEFINED:
            products.append(r)
    distinct = []
    for r in products:
        if all(r != s for s in distinct):
            distinct.append(r)
    if outcome.kind == "undefined":
        assert not products, f"undefined outcome but products exist for {q} * {line}"
        return
    if outcome.kind == "point":
        assert products, f"point outcome but no defined products for {q} * {line}"
        assert distinct == [outcome.point], (
            f"expected all products equal to {outcome.point}, got {distinct}"
        )
        return
    assert all(outcome.line.contains(r) for r in products), (
        f"a sampled product escapes the claimed line for {q} * {line}"
    )
    assert len(distinct) >= 2, "not enough distinct products to pin the line"
    assert line_through(distinct[0], distinct[1]) == outcome.line


def random_plane_line(rng: random.Random, level: int = 2) -> Hyperplane:
    return Hyperplane(random_point_with_level(rng, level, 2))


def random_fuzz_line(rng: random.Random) -> Hyperplane:
    return Hyperplane(random_point_with_level(rng, rng.randint(0, 2), 2))


def brute_products(xs: PointSet, ys: PointSet):
    out = []
    for p in xs:
        for q in ys:
            r = hadamard_points(p, q)
            if r is not UNDEFINED and all(r != s for s in out):
                out.append(r)
    return PointSet(sorted(out, key=lambda p: p.coords))
