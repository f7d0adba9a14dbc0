#!/usr/bin/env python3
"""Compare the compiled and pure-Python integer RREF kernels.

Workloads: random integer matrices at the sizes the engine produces (up to
21 x 35 for invariant computations, 64 x 64 for the Clifford commutants), and
the g2 equation system itself. Both kernels must agree on every input.
"""
from __future__ import annotations

import argparse
import random
import statistics
import time

from g2torsion._kernels import compiled_rref_integer, python_rref_integer


def random_matrix(rng: random.Random, nrows: int, ncols: int, bound: int, rank: int | None = None) -> list[list[int]]:
    if rank is None:
        return [[rng.randint(-bound, bound) for _ in range(ncols)] for _ in range(nrows)]
    base = [[rng.randint(-bound, bound) for _ in range(ncols)] for _ in range(rank)]
    return [[sum(rng.randint(-2, 2) * b[j] for b in base) for j in range(ncols)] for _ in range(nrows)]


def workloads(seed: int) -> dict[str, list[tuple[list[list[int]], int]]]:
    rng = random.Random(seed)
    return {
        "21x35 full rank": [(random_matrix(rng, 21, 35, 9), 35) for _ in range(20)],
        "35x35 rank 27": [(random_matrix(rng, 35, 35, 5, rank=27), 35) for _ in range(10)],
        "64x64 rank 40": [(random_matrix(rng, 64, 64, 3, rank=40), 64) for _ in range(4)],
        "sparse 49x21": [([[rng.choice((0, 0, 0, 0, 1, -1, 2)) for _ in range(21)] for _ in range(49)], 21) for _ in range(40)],
    }


def g2_equations() -> list[tuple[list[list[int]], int]]:
    from g2torsion.g2lie import equation_matrix

    m = equation_matrix()
    rows = [[int(x) for x in r] for r in m.rows]
    return [(rows, m.ncols)] * 200


def timed(kernel, cases, repeat: int) -> float:
    samples = []
    for _ in range(repeat):
        t = time.perf_counter()
        for rows, n in cases:
            kernel(rows, n)
        samples.append(time.perf_counter() - t)
    return statistics.median(samples)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    if compiled_rref_integer is None:
        print("compiled kernel unavailable (build with Cython, or unset G2TORSION_KERNEL); nothing to compare")
        return 1
    loads = workloads(args.seed)
    loads["g2 equations x200"] = g2_equations()
    print(f"{'workload':<20} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for name, cases in loads.items():
        for rows, n in cases:
            if python_rref_integer(rows, n) != compiled_rref_integer(rows, n):
                print(f"{name}: kernels disagree")
                return 2
        tp = timed(python_rref_integer, cases, args.repeat) * 1000
        tc = timed(compiled_rref_integer, cases, args.repeat) * 1000
        print(f"{name:<20} {tp:>10.2f} {tc:>10.2f} {tp / tc:>7.2f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
