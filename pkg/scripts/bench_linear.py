"""Wall-clock scaling of the O(n) kernels in float mode.

    python scripts/bench_linear.py --sizes 1000 10000 100000 1000000
"""
import argparse
import time

import numpy as np

from xmatrix import XMatrix, determinant, exp_x, inverse


def timed(fn, *args, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[10**3, 10**4, 10**5, 10**6])
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    print(f"{'n':>9s} {'multiply':>10s} {'det':>10s} {'inverse':>10s} {'exp':>10s}")
    for n in args.sizes:
        a = XMatrix(rng.uniform(-2, 2, n), rng.uniform(-2, 2, n))
        b = XMatrix(rng.uniform(-2, 2, n), rng.uniform(-2, 2, n))
        row = [timed(lambda: a @ b), timed(determinant, a), timed(inverse, a), timed(exp_x, a)]
        print(f"{n:>9d} " + " ".join(f"{t:10.4f}" for t in row))


if __name__ == "__main__":
    main()
