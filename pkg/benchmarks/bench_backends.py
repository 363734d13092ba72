"""Benchmark the compiled kernel backend against the pure-Python fallback.

Two levels:
  * kernel microbenchmarks (Sturm counts, Horner evaluation, Newton polish)
    on a fixed battery of random polynomials;
  * end-to-end Monte Carlo throughput for the pencil-heavy 2x2x2 format and
    the four-cubics-heavy 3x3x5 format.

Run:  python benchmarks/bench_backends.py [--trials-2x2x2 N] [--trials-3x3x5 N]
"""

import argparse
import time

import numpy as np

from segrank import Format, monte_carlo_rank
from segrank import _kernels


def _battery(seed=0, count=2000):
    rng = np.random.default_rng(seed)
    return [rng.standard_normal(int(rng.integers(2, 11))) for _ in range(count)]


def bench_kernels(backend: str) -> dict:
    _kernels.set_backend(backend)
    polys = _battery()
    xs = np.random.default_rng(1).standard_normal(64)

    start = time.perf_counter()
    total = 0
    for coeffs in polys:
        total += _kernels.sturm_real_root_count(coeffs)
    sturm = time.perf_counter() - start

    start = time.perf_counter()
    for coeffs in polys:
        _kernels.eval_poly(coeffs, xs)
    horner = time.perf_counter() - start

    seeds = np.random.default_rng(2).standard_normal(9) + 0.1j
    start = time.perf_counter()
    for coeffs in polys:
        _kernels.newton_polish(coeffs, seeds, 8)
    polish = time.perf_counter() - start

    return {
        "sturm_us": sturm / len(polys) * 1e6,
        "horner_us": horner / len(polys) * 1e6,
        "polish_us": polish / len(polys) * 1e6,
        "checksum": total,
    }


def bench_monte_carlo(backend: str, fmt: Format, trials: int) -> dict:
    _kernels.set_backend(backend)
    start = time.perf_counter()
    run = monte_carlo_rank(fmt, trials, seed=314)
    elapsed = time.perf_counter() - start
    lead = min(run.rank_estimates)
    return {
        "trials_per_s": trials / elapsed,
        "us_per_trial": elapsed / trials * 1e6,
        "p_hat": run.rank_estimates[lead].p_hat,
        "rejected": run.rejected,
    }


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials-2x2x2", type=int, default=5000)
    parser.add_argument("--trials-3x3x5", type=int, default=300)
    args = parser.parse_args()

    backends = _kernels.available_backends()
    print(f"built backends: {backends}")
    if "c" not in backends:
        print("compiled extension missing: benchmarking pure Python only")

    kernel_rows = {b: bench_kernels(b) for b in backends}
    print("\nkernel microbenchmarks (per call):")
    print(f"{'backend':<8} {'sturm':>10} {'horner':>10} {'polish':>10}")
    for backend, row in kernel_rows.items():
        print(
            f"{backend:<8} {row['sturm_us']:>9.2f}u {row['horner_us']:>9.2f}u "
            f"{row['polish_us']:>9.2f}u"
        )
    checksums = {row["checksum"] for row in kernel_rows.values()}
    print(f"sturm checksum agreement: {len(checksums) == 1}")

    for fmt, trials in [
        (Format(2, 2, 2), args.trials_2x2x2),
        (Format(3, 3, 5), args.trials_3x3x5),
    ]:
        print(f"\nend-to-end monte carlo, format {fmt}, {trials} trials:")
        print(f"{'backend':<8} {'trials/s':>10} {'us/trial':>10} {'p_hat':>8}")
        estimates = set()
        for backend in backends:
            row = bench_monte_carlo(backend, fmt, trials)
            estimates.add(row["p_hat"])
            print(
                f"{backend:<8} {row['trials_per_s']:>10.0f} "
                f"{row['us_per_trial']:>10.0f} {row['p_hat']:>8.4f}"
            )
        print(f"estimate agreement across backends: {len(estimates) == 1}")

    _kernels.set_backend(
        "c" if "c" in _kernels.available_backends() else "python"
    )


if __name__ == "__main__":
    main()
