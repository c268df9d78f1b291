"""Compare the compiled kernels with the numpy fallback.

Times each adjacency scan on its own and then a full relaxed extraction,
once per backend, and prints a table with the speedup.

    python3 benchmarks/bench_backends.py --sizes 1024,4096 --repeats 5
"""
import argparse
import statistics
import time

import numpy as np

from pathfree import kernels
from pathfree.cli import bench_cell
from pathfree.generators import random_tournament


def _best(fn, repeats):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times) * 1e3


def kernel_cases(n, seed=0):
    T = random_tournament(n, seed)
    rng = np.random.default_rng(seed)
    rows = np.sort(rng.choice(n, n // 2, replace=False)).astype(np.int64)
    cols = np.setdiff1d(np.arange(n, dtype=np.int64), rows)
    adj = T.adj
    return {
        "row_counts": lambda: kernels.row_counts(adj, rows, cols),
        "col_counts": lambda: kernels.col_counts(adj, rows, cols),
        "edge_count": lambda: kernels.edge_count(adj, rows, cols),
        "first_edge": lambda: kernels.first_edge(adj, rows, cols),
        "select_out": lambda: kernels.select_out(adj, int(rows[0]), cols, True),
    }


def end_to_end(n, seeds, k, lam):
    return statistics.median(float(bench_cell(n, s, k, "relaxed", lam)["time_ms"])
                             for s in range(seeds))


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", default="1024,2048,4096")
    p.add_argument("--repeats", type=int, default=5)
    p.add_argument("--k", type=int, default=8)
    p.add_argument("--lambda", dest="lam", default="1/4")
    args = p.parse_args()
    backends = kernels.available()
    if "compiled" not in backends:
        print("compiled extension not built; only the numpy fallback is available")
    sizes = [int(s) for s in args.sizes.split(",")]
    print(f"{'n':>6} {'case':<12} " + " ".join(f"{b + ' ms':>13}" for b in backends)
          + ("  speedup" if len(backends) == 2 else ""))
    before = kernels.BACKEND
    try:
        for n in sizes:
            scans = kernel_cases(n)  # the closures look kernels up at call time
            for case in list(scans) + ["find_trans"]:
                row = []
                for b in backends:
                    kernels.use_backend(b)
                    if case == "find_trans":
                        row.append(end_to_end(n, args.repeats, args.k, args.lam))
                    else:
                        row.append(_best(scans[case], args.repeats))
                line = f"{n:>6} {case:<12} " + " ".join(f"{t:>13.3f}" for t in row)
                if len(row) == 2:
                    line += f"  {row[1] / row[0]:7.2f}x"
                print(line)
    finally:
        kernels.use_backend(before)


if __name__ == "__main__":
    main()
