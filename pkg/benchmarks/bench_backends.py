#!/usr/bin/env python3
"""Benchmark the pure-Python and compiled elimination backends.

Two views, both on the shapes the library actually produces:

* micro-kernels: the small matrices that dominate call counts
  (4x4 rank certificates, kernel bases of evaluation matrices);
* end to end: the full grid / Hilbert / generator pipeline on seeded
  generic instances, run once per backend by swapping the kernel
  module behind hada.linalg.

Entries are arbitrary-precision ints, so compilation removes
interpreter and indexing overhead but not bignum cost: the gap is
largest on small matrices and fades as entries grow.

Run from a source tree:  python benchmarks/bench_backends.py
"""

import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from hada import _elim, linalg  # noqa: E402

try:
    from hada import _speedups
except ImportError:
    _speedups = None

BACKENDS = [("python", _elim)] + ([("cython", _speedups)] if _speedups else [])


def matrices(rng, count, nrows, ncols, bits):
    bound = 2**bits
    return [
        [[rng.randint(-bound, bound) for _ in range(ncols)] for _ in range(nrows)]
        for _ in range(count)
    ]


def timed(fn, repeat=3):
    best = None
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best


def micro_rows():
    rng = random.Random(12345)
    specs = [
        ("rank 4x4, 64-bit x5000 (certificates)", "rank", 5000, 4, 4, 64),
        ("rank 2x4, 32-bit x5000 (line checks)", "rank", 5000, 2, 4, 32),
        ("nullspace 8x14, 64-bit x500 (kernels)", "nullspace", 500, 8, 14, 64),
        ("rank 16x35, 64-bit x50 (evaluations)", "rank", 50, 16, 35, 64),
    ]
    for label, op, count, nrows, ncols, bits in specs:
        batch = matrices(rng, count, nrows, ncols, bits)
        times = []
        for _, mod in BACKENDS:
            fn = getattr(mod, op)
            times.append(timed(lambda: [fn(m, ncols) for m in batch]))
        yield label, times


def pipeline(seed):
    from hada.ideals import generator_profile, hilbert_profile
    from hada.space import generic_skew_sample, grid_product_p3, quadric_through

    line, line2, xs, xs2 = generic_skew_sample(4, 4, seed)
    grid = grid_product_p3(xs, xs2, line, line2)
    hilbert_profile(grid.points)
    generator_profile(grid.points)
    quadric_through(grid.points)


def end_to_end_rows():
    times = []
    for _, mod in BACKENDS:
        linalg._impl = mod
        times.append(timed(lambda: [pipeline(s) for s in range(3)], repeat=2))
    linalg._impl = _speedups or _elim
    yield "grid+Hilbert+generators, m=4, 3 seeds", times


def print_table(title, rows):
    print(title)
    header = f"{'workload':44s}" + "".join(f"{name:>12s}" for name, _ in BACKENDS)
    if len(BACKENDS) == 2:
        header += f"{'speedup':>10s}"
    print(header)
    print("-" * len(header))
    for label, times in rows:
        line = f"{label:44s}" + "".join(f"{t * 1000:10.1f}ms" for t in times)
        if len(times) == 2:
            line += f"{times[0] / times[1]:9.2f}x"
        print(line)
    print()


def main():
    if _speedups is None:
        print(
            "compiled backend not built; run: python setup.py build_ext --inplace\n"
        )
    print_table("micro-kernels", micro_rows())
    print_table("end to end", end_to_end_rows())

    if len(BACKENDS) == 2:
        rng = random.Random(99)
        batch = matrices(rng, 50, 6, 8, 128)
        assert all(
            _elim.rref(m, 8) == _speedups.rref(m, 8)
            and _elim.nullspace(m, 8) == _speedups.nullspace(m, 8)
            for m in batch
        )
        print("sanity: backends agree bit for bit on a fresh batch: yes")


if __name__ == "__main__":
    main()
