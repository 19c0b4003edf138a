#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Runs the three hot workloads through both backend modules directly (the
QUADBOUND_BACKEND env var only controls which one the package uses) and
prints a timing table.

Usage: python benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import math
import time

import numpy as np

from quadbound._kernels import nb_backend, np_backend

EULER_GAMMA = 0.57721566490153286


def _bench(fn, repeat):
    fn()  # warmup (and numba compile)
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def _lambda_inputs(kappa=2.0, p=10, vmax=40):
    n = 2**p
    h = 1.0 / n
    scale = math.exp(kappa * EULER_GAMMA) / math.gamma(kappa)
    values = np.empty(vmax * n + 1)
    values[: n + 1] = scale * (h * np.arange(n + 1)) ** (kappa - 1.0)
    mids = scale * (h * (np.arange(n) + 0.5)) ** (kappa - 1.0)
    return values, mids, kappa, h, n, vmax


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    xs = np.arange(1.0, 10.5, 1.0)
    rng = np.random.default_rng(42)
    w = rng.standard_normal(200_000)
    v = rng.standard_normal(200_000)
    values, mids, kappa, h, n, vmax = _lambda_inputs()

    workloads = [
        ("simpson_cin_error(x=1..10, n=1000)", lambda b: b.simpson_cin_error(xs, 1000)),
        ("cin_dd(4901-point scan grid)", lambda b: b.cin_dd(30.0 + 0.001 * np.arange(4901))),
        ("lambda_fill(kappa=2, 2^-10, vmax=40)", lambda b: b.lambda_fill(values.copy(), mids, kappa, h, n, vmax)),
        ("comp_dot(200k)", lambda b: b.comp_dot(w, v)),
    ]

    print(f"{'workload':<42} {'numba':>10} {'numpy':>10} {'speedup':>8}")
    for name, work in workloads:
        t_nb = _bench(lambda: work(nb_backend), args.repeat)
        t_np = _bench(lambda: work(np_backend), args.repeat)
        print(f"{name:<42} {t_nb * 1e3:>8.2f}ms {t_np * 1e3:>8.2f}ms {t_np / t_nb:>7.1f}x")

    # Cross-backend agreement on the most sensitive quantity.
    e_nb = nb_backend.simpson_cin_error(xs, 1000)
    e_np = np_backend.simpson_cin_error(xs, 1000)
    print("max |rel diff| on E_1000:", float(np.max(np.abs((e_nb - e_np) / e_np))))


if __name__ == "__main__":
    main()
