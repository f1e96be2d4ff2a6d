"""Compare the numpy and numba kernel backends on realistic workloads.

Run with:  python3 benchmarks/bench_kernels.py [--repeat N]

Workloads mirror the package hot paths: batched octonion products (corpus
certification), series-product convolutions at the default truncation
order, and grid evaluation of a truncated series over many slice points
(verification sweeps).  The numba timings exclude compilation (one warmup
call per kernel).
"""

import argparse
import time

import numpy as np

from octobohr import _kernels


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5,
                        help="timing repetitions per case (default 5)")
    args = parser.parse_args()

    numpy_impl = _kernels.NUMPY_IMPL
    try:
        numba_impl = _kernels.load_impl("numba")
    except ImportError:
        print("numba is not importable; nothing to compare")
        return 1

    rng = np.random.default_rng(0)
    mul_x = rng.standard_normal((200_000, 8))
    mul_y = rng.standard_normal((200_000, 8))
    conv_a = rng.standard_normal((301, 8))
    conv_b = rng.standard_normal((301, 8))
    ev_coeffs = rng.standard_normal((301, 8))
    ev_icoeffs = rng.standard_normal((301, 8))
    theta = rng.uniform(0.0, 2.0 * np.pi, 20_000)
    ev_alpha = 0.3 * np.cos(theta)
    ev_beta = 0.3 * np.sin(theta)

    cases = [
        ("mul_batch 200k pairs",
         lambda impl: impl.mul_batch(mul_x, mul_y)),
        ("conv 301x301",
         lambda impl: impl.conv(conv_a, conv_b, 601)),
        ("eval 301 coeffs x 20k points",
         lambda impl: impl.eval_points(ev_coeffs, ev_icoeffs, ev_alpha, ev_beta)),
    ]

    print("%-32s %12s %12s %8s" % ("kernel", "numpy [ms]", "numba [ms]", "speedup"))
    for name, runner in cases:
        runner(numba_impl)  # compile before timing
        t_np = _time(lambda: runner(numpy_impl), args.repeat)
        t_nb = _time(lambda: runner(numba_impl), args.repeat)
        print(
            "%-32s %12.2f %12.2f %7.1fx"
            % (name, t_np * 1e3, t_nb * 1e3, t_np / t_nb)
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
