"""Compare the compiled and pure-Python kernels on generator-matrix workloads.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each row times one kernel on the generator matrix of a GRS code and checks
that both backends return identical results before reporting.
"""

import argparse
import random
import sys
import timeit

from grsequiv import _backend, gf, grs_new

CASES = [
    # (q, n, k)
    (5, 5, 3),
    (7, 7, 4),
    (9, 9, 4),
    (16, 16, 4),
    (27, 20, 3),
    (32, 24, 3),
]


def _code(q, n, k):
    F = gf(q)
    rng = random.Random(f"bench-{q}-{n}-{k}")
    return grs_new(F, k, rng.sample(range(q), n), [rng.randrange(1, q) for _ in range(n)])


def _time(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if not _backend.NATIVE_AVAILABLE:
        print("compiled kernels not built; run `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1

    print(f"{'kernel':<11}{'q':>4}{'n':>4}{'k':>3}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for q, n, k in CASES:
        code = _code(q, n, k)
        F, rows = code.F, code.generator_matrix()
        for name in ("rref", "span", "min_weight"):
            kernel = getattr(_backend, name)
            if name == "span" and q**k > 300_000:
                continue
            py = kernel(F, rows, code.N, "python")
            cy = kernel(F, rows, code.N, "cython")
            assert py == cy, f"{name} disagrees for q={q} n={n} k={k}"
            t_py = _time(lambda: kernel(F, rows, code.N, "python"), args.repeat)
            t_cy = _time(lambda: kernel(F, rows, code.N, "cython"), args.repeat)
            print(f"{name:<11}{q:>4}{n:>4}{k:>3}{t_py:>12.5f}{t_cy:>12.5f}{t_py / t_cy:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
