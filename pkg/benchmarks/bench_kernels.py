"""Benchmark the compiled Birkhoff kernel against the numpy fallback.

Usage:
    python benchmarks/bench_kernels.py [--period 13] [--repeats 3] [--workers N]

Times one kernel pass over all fixed points of the cat map at the given
period with a two-term roof and a time change, for every importable
backend and worker count, then an end-to-end graded-determinant
evaluation at a spectral parameter inside the convergence region.
"""

import argparse
import time

from friedzeta import Character, SuspensionModel, ToralAutomorphism, TrigPolynomial, fixed_points
from friedzeta._kernels import available_backends, birkhoff_sums
from friedzeta.continuation import dynamical_determinant


def time_call(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--period", type=int, default=13)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--workers", type=int, default=None)
    args = parser.parse_args()

    auto = ToralAutomorphism(((2, 1), (1, 1)))
    roof = TrigPolynomial(1.0, ((1, 0, 0.05, 0.0), (0, 1, 0.0, 0.04)))
    change = TrigPolynomial(0.0, ((1, 1, 0.03, 0.0),))
    model = SuspensionModel(auto, roof, change)
    pts = fixed_points(auto, args.period)
    n = pts.count
    print(f"cat map, period {args.period}: {n} fixed points, {args.period} roof evaluations each")
    print(f"{'backend':<10} {'workers':>7} {'seconds':>10} {'ns/point-step':>14}")

    results = {}
    worker_counts = [1, args.workers] if args.workers else [1, 4]
    for name in sorted(available_backends()):
        for workers in worker_counts:
            seconds = time_call(
                lambda: birkhoff_sums(
                    pts.num1, pts.num2, pts.den, auto.matrix, args.period,
                    roof, change, 0.05, workers=workers, backend=name,
                ),
                args.repeats,
            )
            results[(name, workers)] = seconds
            per = seconds / (n * args.period) * 1e9
            print(f"{name:<10} {workers:>7} {seconds:>10.4f} {per:>14.2f}")

    if ("cython", worker_counts[-1]) in results and ("python", worker_counts[-1]) in results:
        ratio = results[("python", worker_counts[-1])] / results[("cython", worker_counts[-1])]
        print(f"compiled speedup over numpy fallback at {worker_counts[-1]} workers: {ratio:.2f}x")

    rep = Character.from_angle_fraction(0.5)
    lam = model.default_entropy() + 1.0
    start = time.perf_counter()
    det = dynamical_determinant(model, rep, 1, lam, args.period, workers=args.workers)
    elapsed = time.perf_counter() - start
    print(
        f"end-to-end d_1({lam:.3f}) with n_max={args.period}: {elapsed:.3f} s, "
        f"{det.n_used} coefficients, |value| = {abs(det.value):.6f}"
    )


if __name__ == "__main__":
    main()
