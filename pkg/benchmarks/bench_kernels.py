"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from sslattice import _pykernels
from sslattice.generators import boolean_lattice, make_family

try:
    from sslattice import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases():
    for name, L in (("partition 5", make_family("partition", 5)),
                    ("partition 6", make_family("partition", 6)),
                    ("boolean 7", boolean_lattice(7)),
                    ("noncrossing 6", make_family("noncrossing_partition", 6))):
        M, J = L.meet_table, L.join_table
        topo = np.lexsort((np.arange(L.n), L.leq.sum(axis=0)))
        members = np.arange(L.n, dtype=np.int32)
        seed = np.zeros(L.n, dtype=bool)
        seed[[L.bottom, L.top]] = True
        seed[L.n // 2] = True
        yield name, L.n, {
            "lattice_tables": lambda k, L=L, topo=topo: k.lattice_tables(L.leq, topo),
            "pentagon scan": lambda k, M=M, J=J, n=L.n: [k.pentagon_short(M, J, z) for z in range(n)],
            "distributivity": lambda k, M=M, J=J, mem=members: k.distributive_violation(M, J, mem),
            "closure": lambda k, M=M, J=J, s=seed: k.closure(M, J, s),
        }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; only the fallback is available")
    print(f"{'lattice':<15}{'n':>5}  {'kernel':<16}{'python s':>10}{'cython s':>10}{'speedup':>9}")
    for name, n, ops in cases():
        for op, fn in ops.items():
            tp = best_of(lambda: fn(_pykernels), args.repeat)
            if _ckernels is None:
                print(f"{name:<15}{n:>5}  {op:<16}{tp:>10.4f}{'-':>10}{'-':>9}")
                continue
            tc = best_of(lambda: fn(_ckernels), args.repeat)
            print(f"{name:<15}{n:>5}  {op:<16}{tp:>10.4f}{tc:>10.4f}{tp / tc:>8.1f}x")


if __name__ == "__main__":
    main()
