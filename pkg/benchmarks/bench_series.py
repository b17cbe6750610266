"""Benchmark the compiled series kernel against the pure Python twin.

Run from the repository root (after building the extension):

    python benchmarks/bench_series.py [--repeats N]

Workloads cover the kernel's regimes: the exact-ratio path (alpha = 1), a
routine fractional evaluation, and a heavy-cancellation evaluation that
dominates classification sweeps.
"""

import argparse
import time

from mlsemigroup import _ddcore as python_kernel

try:
    from mlsemigroup import _ddcore_cy as compiled_kernel
except ImportError:
    compiled_kernel = None

WORKLOADS = (
    ("exponential path  E_1(-8)", 1.0, 1.0, -8.0),
    ("routine fractional E_0.7(-2.5)", 0.7, 1.0, -2.5),
    ("two-parameter      E_{0.5,0.5}(2)", 0.5, 0.5, 2.0),
    ("heavy cancellation E_0.3(-3.03)", 0.3, 1.0, -3.0315828800275765),
)


def time_one(kernel, alpha, beta, z, repeats):
    best = float("inf")
    for _ in range(3):
        t0 = time.perf_counter()
        for _ in range(repeats):
            kernel.ml_series(alpha, beta, z, 1e-14, 10000)
        best = min(best, (time.perf_counter() - t0) / repeats)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=None,
                        help="evaluations per timing loop (default: adaptive)")
    args = parser.parse_args()

    if compiled_kernel is None:
        print("compiled kernel not available; timing the pure Python twin only")

    print(f"{'workload':<36} {'python':>12} {'cython':>12} {'speedup':>9}")
    for name, alpha, beta, z in WORKLOADS:
        _, _, terms, _ = python_kernel.ml_series(alpha, beta, z, 1e-14, 10000)
        py_reps = args.repeats or max(2, int(2000 / terms))
        t_py = time_one(python_kernel, alpha, beta, z, py_reps)
        if compiled_kernel is None:
            print(f"{name:<36} {t_py * 1e6:>10.1f}us {'-':>12} {'-':>9}")
            continue
        cy_reps = args.repeats or max(50, int(200000 / terms))
        t_cy = time_one(compiled_kernel, alpha, beta, z, cy_reps)
        same = python_kernel.ml_series(alpha, beta, z, 1e-14, 10000) == \
            compiled_kernel.ml_series(alpha, beta, z, 1e-14, 10000)
        flag = "" if same else "  RESULTS DIFFER"
        print(
            f"{name:<36} {t_py * 1e6:>10.1f}us {t_cy * 1e6:>10.1f}us "
            f"{t_py / t_cy:>8.0f}x{flag}"
        )


if __name__ == "__main__":
    main()
