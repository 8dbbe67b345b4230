#!/usr/bin/env python3
"""Compare the numba kernels against the pure-Python fallback.

The fallback is what you get with COXKNOT_PURE_PYTHON=1; here both paths
are exercised in one process (the polygon kernel takes a flag, and the
search kernel module is reloaded with the flag set).

Run:  python3 benchmarks/bench_kernels.py
"""

import importlib
import os
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from coxknot import coxeter as cx  # noqa: E402
from coxknot.knots.polygon import PolygonalKnot, reduce_polygon  # noqa: E402


def time_call(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_polygon():
    word = ("ACDCBCDCABCDCABCDCABCDCABCABCDCABCDCABCDCABCDCABCD"
            "CBCDCABCDCABCDCABCABCDCABCDCABCDCABCDCABCDCABCDCAB"
            "CABCDCABCDCABCDCABCDCABCDCABCDCABCDCABCDCBCDCABCDC"
            "ABCDCABCDCABCDCABCDCABCABCDCABCDCABCDCABCDCABCDCAB"
            "CDCBCDCABCDCABCDCABCDCABCDCABCDCABCDCABCDCABCABCDC")
    pts = cx.centroid_path(word * 3)
    knot = PolygonalKnot(tuple(pts[:-1]))
    reduce_polygon(knot, use_kernel=True)  # warm the JIT
    t_kernel, a = time_call(lambda: reduce_polygon(knot, use_kernel=True))
    t_pure, b = time_call(lambda: reduce_polygon(knot, use_kernel=False), 1)
    assert a.vertices == b.vertices
    return ("polygon reduction (750-gon)", t_kernel, t_pure)


def bench_search():
    import numpy as np

    from coxknot import _kernels

    def run(module, L=12):
        total = 0
        from coxknot.search import _subtree_prefixes
        for prefix in _subtree_prefixes(L):
            total += len(module.dfs_enumerate(
                np.array(prefix, dtype=np.int64), L, module.MODE_ORDER3,
                10 ** 9))
        return total

    run(_kernels)  # warm the JIT
    t_kernel, n1 = time_call(lambda: run(_kernels))
    os.environ["COXKNOT_PURE_PYTHON"] = "1"
    pure = importlib.reload(_kernels)
    t_pure, n2 = time_call(lambda: run(pure), 1)
    del os.environ["COXKNOT_PURE_PYTHON"]
    importlib.reload(_kernels)
    assert n1 == n2
    return (f"order-3 search (piece length 12, {n1} survivors)",
            t_kernel, t_pure)


def main():
    rows = [bench_polygon(), bench_search()]
    width = max(len(r[0]) for r in rows)
    print(f"{'workload':{width}}  {'numba':>9}  {'pure':>9}  {'speedup':>8}")
    for name, tk, tp in rows:
        print(f"{name:{width}}  {tk:8.3f}s  {tp:8.3f}s  {tp / tk:7.1f}x")


if __name__ == "__main__":
    main()
