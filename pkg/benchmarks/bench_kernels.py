"""Time the numba-compiled kernels against their plain-numpy bodies.

Run: python benchmarks/bench_kernels.py [--size 20000] [--repeat 3]

Each kernel is called once through the compiled dispatcher (to trigger
compilation) before timing.  Outputs of both paths are compared, so the
script doubles as a smoke test of the fallback.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from rlzindex import kernels
from rlzindex._accel import NUMBA_ENABLED


def _best(fn, args, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def _same(a, b):
    if isinstance(a, tuple):
        return all(_same(x, y) for x, y in zip(a, b))
    return np.array_equal(np.asarray(a), np.asarray(b))


def cases(size: int, rng):
    g = rng.integers(0, 4, size).astype(np.uint8)
    doc = g.copy()
    hits = rng.choice(size, max(1, size // 200), replace=False)
    doc[hits] = (doc[hits] + 1) % 4
    g64 = g.astype(np.int64)
    sa = kernels.suffix_array(g64)
    lcp = kernels.lcp_kasai(g64, sa)
    ends = rng.integers(0, size, size).astype(np.int64)
    table = kernels.argmax_table(ends)
    ys_levels, ids_levels = kernels.range_tree_build(rng.permutation(size).astype(np.int64))
    buf = np.empty(size, dtype=np.int64)
    yield "suffix_array", kernels.suffix_array, (g64,)
    yield "lcp_kasai", kernels.lcp_kasai, (g64, sa)
    yield "smaller_values", kernels.smaller_values, (lcp,)
    yield "rlz_parse", kernels.rlz_parse, (g, sa, doc, buf.copy(), buf.copy())
    yield "argmax_table", kernels.argmax_table, (ends,)
    yield "rmq_report", kernels.rmq_report, (ends, table, size, size - 50, buf)
    yield "range_tree_report", kernels.range_tree_report, (
        ys_levels, ids_levels, size // 4, 3 * size // 4, size // 4, size // 2, buf)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--size", type=int, default=20_000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if not NUMBA_ENABLED:
        print("numba disabled (RLZI_DISABLE_NUMBA set or numba missing); nothing to compare")
        return 1
    rng = np.random.default_rng(0)
    print(f"size={args.size} repeat={args.repeat}")
    print(f"{'kernel':<20}{'numba s':>12}{'numpy s':>12}{'speedup':>10}  same")
    for name, fn, call_args in cases(args.size, rng):
        fn(*call_args)  # compile
        t_jit, out_jit = _best(fn, call_args, args.repeat)
        t_py, out_py = _best(fn.py_func, call_args, 1)
        # rmq_report and range_tree_report write into a shared buffer, so
        # compare only their scalar results
        same = _same(out_jit, out_py)
        print(f"{name:<20}{t_jit:>12.5f}{t_py:>12.5f}{t_py / max(t_jit, 1e-9):>10.1f}  {same}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
