"""Compare the numba and numpy backends of the batch Nielsen kernels.

    python benchmarks/bench_kernels.py [--rows N] [--bound B] [--repeat R]

The first numba call includes JIT compilation (or cache load); it is
reported separately from the warm timings.
"""

import argparse
import time

import numpy as np

from kleinbraid._kernels import HAVE_NUMBA, nielsen_rows, zero_locus_sweep


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rows", type=int, default=2_000_000)
    ap.add_argument("--bound", type=int, default=4)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    params = rng.integers(-8, 9, size=(args.rows, 7))
    params[:, :2] = rng.integers(0, 2, size=(args.rows, 2))

    backends = ["numpy"] + (["numba"] if HAVE_NUMBA else [])
    cells = 3 * (2 * args.bound + 1) ** 8
    print(f"nielsen_rows: {args.rows} rows; zero_locus_sweep: {cells} cells")
    print(f"{'backend':8} {'kernel':17} {'first (s)':>10} {'best (s)':>10}")
    results = {}
    for backend in backends:
        for name, fn in (
            ("nielsen_rows", lambda: nielsen_rows(params, backend)),
            ("zero_locus_sweep", lambda: zero_locus_sweep(args.bound, args.bound, backend)),
        ):
            first, _ = best_of(fn, 1)
            best, out = best_of(fn, args.repeat)
            results[backend, name] = out
            print(f"{backend:8} {name:17} {first:10.4f} {best:10.4f}")

    if HAVE_NUMBA:
        a, b = results["numpy", "nielsen_rows"], results["numba", "nielsen_rows"]
        same = np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1])
        same &= results["numpy", "zero_locus_sweep"] == results["numba", "zero_locus_sweep"]
        print(f"backends agree: {same}")


if __name__ == "__main__":
    main()
