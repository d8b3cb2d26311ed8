"""Compare the numba and numpy kernel backends on the hot scans.

Usage: python3 benchmarks/bench_kernels.py [--sizes 16,32,64] [--repeat 5]

Times the self-distributivity check and both witness scans on
generalized-Alexander tables of growing order.  The numba path is warmed
up once before timing so JIT compilation is excluded.
"""

import argparse
import time

import numpy as np

from quandlekit._kernels import (
    HAS_NUMBA,
    hopf_witness_numpy,
    self_distrib_violation_numpy,
    trefoil_witness_numpy,
)
from quandlekit.quandles import dihedral_quandle

if HAS_NUMBA:
    from quandlekit._kernels import (
        hopf_witness_numba,
        self_distrib_violation_numba,
        trefoil_witness_numba,
    )

KERNELS = ["self_distrib", "hopf_scan", "trefoil_scan"]


def make_table(n):
    # Dihedral quandles: valid at every order, hopf/trefoil admissible,
    # so the witness scans run to completion (worst case).
    return np.ascontiguousarray(dihedral_quandle(n).table)


def run(backend, kernel, table):
    if backend == "numpy":
        fn = {"self_distrib": self_distrib_violation_numpy,
              "hopf_scan": hopf_witness_numpy,
              "trefoil_scan": trefoil_witness_numpy}[kernel]
    else:
        fn = {"self_distrib": self_distrib_violation_numba,
              "hopf_scan": hopf_witness_numba,
              "trefoil_scan": trefoil_witness_numba}[kernel]
    return fn(table)


def bench(backend, kernel, table, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        run(backend, kernel, table)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="16,32,64,96")
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    backends = ["numpy"] + (["numba"] if HAS_NUMBA else [])
    if not HAS_NUMBA:
        print("numba not importable; timing numpy only")
    else:
        warm = make_table(8)
        for k in KERNELS:
            run("numba", k, warm)

    print(f"{'kernel':<14} {'n':>4} " +
          " ".join(f"{b + ' (ms)':>12}" for b in backends) +
          ("      speedup" if HAS_NUMBA else ""))
    for kernel in KERNELS:
        for n in sizes:
            table = make_table(n)
            times = {b: bench(b, kernel, table, args.repeat) for b in backends}
            row = f"{kernel:<14} {n:>4} " + " ".join(
                f"{times[b] * 1e3:>12.3f}" for b in backends)
            if HAS_NUMBA:
                row += f"{times['numpy'] / times['numba']:>12.1f}x"
            print(row)


if __name__ == "__main__":
    main()
