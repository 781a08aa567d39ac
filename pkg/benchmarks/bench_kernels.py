"""Benchmark the compiled kernels against the pure-numpy fallbacks.

Run:  python3 benchmarks/bench_kernels.py [--repeats N]

The pure implementations are always importable; the compiled ones are used
only when the extension built (kernels.USING_COMPILED).  Re-running with
DOPEKIT_FORCE_PURE=1 makes the whole package use the fallbacks, but this
script times both paths directly in a single process.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from dopekit import kernels
from dopekit.kernels import (
    _affine2_update_pure,
    _sgd_update_pure,
    _splat_bilinear_pure,
)


def timeit(fn, repeats):
    # one warmup, then best-of-repeats
    fn()
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_sgd(repeats, n=65 * 256, iters=200):
    rng = np.random.default_rng(0)
    p = rng.normal(size=n)
    v = np.zeros(n)
    g = rng.normal(size=n)

    def run(fn):
        def body():
            for _ in range(iters):
                fn(p, v, g, 0.02, 0.9, 1e-4)
        return body

    return [("sgd_update", f"{n} params x {iters}",
             timeit(run(_sgd_update_pure), repeats),
             timeit(run(kernels.sgd_update), repeats))]


def bench_affine2(repeats, n=65 * 256, iters=200):
    rng = np.random.default_rng(1)
    p = rng.normal(size=n)
    v = rng.normal(size=n)

    def run(fn):
        def body():
            for _ in range(iters):
                fn(p, v, 0.9, 1e-4, -0.02, 0.999)
        return body

    return [("affine2_update", f"{n} params x {iters}",
             timeit(run(_affine2_update_pure), repeats),
             timeit(run(kernels.affine2_update), repeats))]


def bench_splat(repeats, n_pts=40, iters=2000):
    rng = np.random.default_rng(2)
    gx = rng.uniform(0.0, 7.0, n_pts)
    gy = rng.uniform(0.0, 7.0, n_pts)
    grid = np.zeros((8, 8))

    def run(fn):
        def body():
            for _ in range(iters):
                grid[:] = 0.0
                fn(grid, gx, gy)
        return body

    return [("splat_bilinear", f"{n_pts} points x {iters}",
             timeit(run(_splat_bilinear_pure), repeats),
             timeit(run(kernels.splat_bilinear), repeats))]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--repeats", type=int, default=5,
                    help="best-of repeats per measurement (default: 5)")
    args = ap.parse_args()
    print(f"compiled extension in use: {kernels.USING_COMPILED}")
    rows = (bench_sgd(args.repeats) + bench_affine2(args.repeats)
            + bench_splat(args.repeats))
    print(f"{'kernel':<16} {'workload':<22} {'pure (ms)':>10} "
          f"{'active (ms)':>12} {'speedup':>8}")
    for name, load, pure, active in rows:
        print(f"{name:<16} {load:<22} {1e3 * pure:>10.2f} "
              f"{1e3 * active:>12.2f} {pure / active:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
