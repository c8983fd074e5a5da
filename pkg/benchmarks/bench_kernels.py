"""Timing comparison of the two row-reduction backends.

The compiled kernel and the pure-Python fallback implement the same
interface (echelon, reduce_rows); this script cross-checks them on a
small instance and then times both on dense random matrices mod the
default 61-bit prime, at sizes typical of the Macaulay eliminations the
shift operators run.

Usage: python3 benchmarks/bench_kernels.py [--sizes 200x400,400x800]
"""

import argparse
import time

import numpy as np

from shift_lab import kernels
from shift_lab.modp import DEFAULT_PRIME


def random_matrix(rows, cols, seed):
    rng = np.random.default_rng(seed)
    return rng.integers(0, DEFAULT_PRIME, size=(rows, cols), dtype=np.uint64)


def time_echelon(impl, A, repeats):
    best = float("inf")
    for _ in range(repeats):
        work = A.copy()
        t0 = time.perf_counter()
        impl.echelon(work, DEFAULT_PRIME)
        best = min(best, time.perf_counter() - t0)
    return best


def time_reduce(impl, R, pivots, V, repeats):
    best = float("inf")
    for _ in range(repeats):
        work = V.copy()
        t0 = time.perf_counter()
        impl.reduce_rows(R, pivots, work, DEFAULT_PRIME)
        best = min(best, time.perf_counter() - t0)
    return best


def cross_check(backends):
    A = random_matrix(40, 80, seed=5)
    results = {}
    for name, impl in backends.items():
        work = A.copy()
        pivots = impl.echelon(work, DEFAULT_PRIME)
        results[name] = (list(pivots), work.copy())
    names = sorted(results)
    base_piv, base_mat = results[names[0]]
    for name in names[1:]:
        piv, mat = results[name]
        assert piv == base_piv, (names[0], name)
        assert np.array_equal(mat, base_mat), (names[0], name)
    print(f"cross-check ok on {A.shape[0]}x{A.shape[1]} "
          f"({len(base_piv)} pivots, backends: {', '.join(names)})")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="100x200,200x400,400x800",
                        help="comma-separated ROWSxCOLS echelon sizes")
    parser.add_argument("--repeats", type=int, default=3,
                        help="timing repeats; the best run is reported")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    backends = {name: impl for name, impl in kernels.get_backends().items()
                if impl is not None}
    if "compiled" not in backends:
        print("compiled kernel not available; timing the fallback only")
    cross_check(backends)

    sizes = []
    for token in args.sizes.split(","):
        rows, cols = token.lower().split("x")
        sizes.append((int(rows), int(cols)))

    print(f"\nechelon (mod {DEFAULT_PRIME}), best of {args.repeats}:")
    header = f"{'size':>12}" + "".join(f"{name:>12}" for name in sorted(backends))
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for rows, cols in sizes:
        A = random_matrix(rows, cols, args.seed)
        times = {name: time_echelon(impl, A, args.repeats)
                 for name, impl in backends.items()}
        line = f"{f'{rows}x{cols}':>12}"
        for name in sorted(backends):
            line += f"{times[name] * 1e3:>10.1f}ms"
        if len(times) == 2:
            line += f"{times['python'] / times['compiled']:>9.1f}x"
        print(line)

    print(f"\nreduce_rows against a {sizes[-1][0]}x{sizes[-1][1]} basis:")
    R = random_matrix(*sizes[-1], seed=args.seed + 1)
    pivots = backends[sorted(backends)[0]].echelon(R, DEFAULT_PRIME)
    V = random_matrix(max(sizes[-1][0] // 2, 1), sizes[-1][1], args.seed + 2)
    for name in sorted(backends):
        best = time_reduce(backends[name], R, pivots, V, args.repeats)
        print(f"{name:>12}: {best * 1e3:8.1f}ms for {V.shape[0]} rows")


if __name__ == "__main__":
    main()
