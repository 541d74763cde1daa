"""Benchmark the compiled kernels against the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from resolvekit import _pykernels
from resolvekit.families import cycle, grid, paper_unicyclic_example
from resolvekit.graph import all_pairs_distances
from resolvekit.solvers import last_diff_matrix

try:
    from resolvekit import _ckernels
except ImportError:
    _ckernels = None


def timeit(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench_case(name, make_args, runners, repeat):
    args = make_args()
    rows = []
    for label, impl in runners:
        secs, result = timeit(lambda: impl(*args), repeat)
        rows.append((label, secs, result))
    base = rows[0][1]
    print(f"\n{name}")
    for label, secs, _ in rows:
        speedup = base / secs if secs > 0 else float("inf")
        print(f"  {label:<10} {secs * 1e3:10.3f} ms   x{speedup:.1f}")
    results = [r for _, _, r in rows]
    assert all(_same(results[0], r) for r in results[1:]), f"{name}: lanes disagree"


def _same(a, b):
    try:
        import numpy as np

        if isinstance(a, np.ndarray):
            return bool(np.array_equal(a, b))
    except ImportError:
        pass
    if isinstance(a, tuple):
        return a[0] == b[0]
    return a == b


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    opts = ap.parse_args()

    if _ckernels is None:
        print("compiled backend not built; showing pure lane only")
        lanes_bfs = [("pure", _pykernels.bfs_all_pairs)]
        lanes_pd = [("pure", _pykernels.search_pd)]
    else:
        lanes_bfs = [
            ("pure", _pykernels.bfs_all_pairs),
            ("compiled", _ckernels.bfs_all_pairs),
        ]
        lanes_pd = [
            ("pure", _pykernels.search_pd),
            ("compiled", _ckernels.search_pd),
        ]

    big = grid(14, 14)
    bench_case(
        f"bfs_all_pairs on {big.n}-vertex grid",
        lambda: ([list(b) for b in big.adjacency],),
        lanes_bfs,
        opts.repeat,
    )

    g34 = grid(3, 4)
    d34 = all_pairs_distances(g34)
    bench_case(
        "search_pd(t=3) on the 3x4 grid",
        lambda: (d34.d, 3, last_diff_matrix(d34.d)),
        lanes_pd,
        opts.repeat,
    )

    c9 = cycle(9)
    d9 = all_pairs_distances(c9)
    bench_case(
        "search_pd(t=2, no solution) on C_9",
        lambda: (d9.d, 2, last_diff_matrix(d9.d)),
        lanes_pd,
        opts.repeat,
    )

    uni, _, _ = paper_unicyclic_example()
    du = all_pairs_distances(uni)
    bench_case(
        "search_pd(t=4) on the 15-vertex unicyclic showcase",
        lambda: (du.d, 4, last_diff_matrix(du.d)),
        lanes_pd,
        opts.repeat,
    )


if __name__ == "__main__":
    main()
