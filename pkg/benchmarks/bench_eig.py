#!/usr/bin/env python3
"""Benchmark the compiled Jacobi kernel against the numpy fallback.

Usage: python benchmarks/bench_eig.py [--dims 8,16,32,64] [--repeats 5]

The eigensolver dominates the runtime of every audit suite, which is why it
has a compiled core; this prints both backends side by side (plus LAPACK's
eigh as a reference point) so the trade-off stays visible.
"""

import argparse
import time

import numpy as np

from entroflow import _jacobi_py
from entroflow.rng import RngSeed, complex_gaussian

try:
    from entroflow import _jacobi_cy
except ImportError:
    _jacobi_cy = None


def random_hermitian(dim, seed):
    g = complex_gaussian((dim, dim), RngSeed(seed).generator())
    return (g + g.conj().T) / 2


def best_of(fn, repeats):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--dims", default="8,16,32,64")
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()
    dims = [int(tok) for tok in args.dims.split(",")]

    if _jacobi_cy is None:
        print("compiled kernel not built; showing fallback only "
              "(run `pip install -e . --no-build-isolation`)")

    header = f"{'dim':>5} {'python':>12} {'cython':>12} {'speedup':>9} {'lapack':>12}"
    print(header)
    print("-" * len(header))
    for dim in dims:
        m = random_hermitian(dim, seed=1000 + dim)
        t_py = best_of(lambda: _jacobi_py.jacobi_eigh(m, 1e-12, 100), args.repeats)
        t_la = best_of(lambda: np.linalg.eigh(m), args.repeats)
        if _jacobi_cy is not None:
            t_cy = best_of(lambda: _jacobi_cy.jacobi_eigh(m, 1e-12, 100), args.repeats)
            print(f"{dim:>5} {t_py * 1e3:>10.2f}ms {t_cy * 1e3:>10.2f}ms "
                  f"{t_py / t_cy:>8.1f}x {t_la * 1e3:>10.2f}ms")
        else:
            print(f"{dim:>5} {t_py * 1e3:>10.2f}ms {'—':>12} {'—':>9} {t_la * 1e3:>10.2f}ms")


if __name__ == "__main__":
    main()
