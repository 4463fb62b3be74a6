"""Time the FFT-based DCT-2 against the dense matrix path.

Usage: python benchmarks/bench_dct.py [N ...]
"""

import argparse
import timeit

import numpy as np

from fqtkit.transforms import build_matrix, fast_dct2, forward


def bench(n: int, repeat: int = 7) -> tuple:
    x = np.random.default_rng(0).standard_normal(n)
    t0 = timeit.default_timer()
    m = build_matrix("dct2", n)
    build = timeit.default_timer() - t0
    number = max(1, 20000 // n)
    fast = min(timeit.repeat(lambda: fast_dct2(x), number=number, repeat=repeat)) / number
    dense = min(timeit.repeat(lambda: forward(m, x), number=number, repeat=repeat)) / number
    err = np.abs(fast_dct2(x) - forward(m, x)).max()
    return build, dense, fast, err


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("sizes", nargs="*", type=int, default=[64, 256, 1024, 4096])
    args = p.parse_args()
    print(f"{'N':>6} {'build ms':>9} {'dense us':>10} {'fast us':>9} {'speed-up':>9} {'max err':>9}")
    for n in args.sizes:
        build, dense, fast, err = bench(n)
        print(f"{n:>6} {build * 1e3:>9.2f} {dense * 1e6:>10.1f} {fast * 1e6:>9.1f} {dense / fast:>8.1f}x {err:>9.1e}")


if __name__ == "__main__":
    main()
