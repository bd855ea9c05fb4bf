"""Kernel checks, run on both the compiled and the plain numpy path."""
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rlzindex import kernels
from rlzindex._accel import NUMBA_ENABLED
from rlzindex import oracle

PATHS = ["compiled", "python"] if NUMBA_ENABLED else ["python"]


def pick(fn, path):
    return fn if path == "compiled" else fn.py_func


def naive_lcp(s: bytes, sa):
    out = [-1]
    for a, b in zip(sa, sa[1:]):
        k = 0
        while a + k < len(s) and b + k < len(s) and s[a + k] == s[b + k]:
            k += 1
        out.append(k)
    return out


texts = st.binary(min_size=1, max_size=60).map(lambda b: bytes(97 + x % 3 for x in b))


@pytest.mark.parametrize("path", PATHS)
@settings(max_examples=60, deadline=None)
@given(s=texts)
def test_suffix_array_and_lcp(path, s):
    codes = np.frombuffer(s, dtype=np.uint8).astype(np.int64)
    sa = pick(kernels.suffix_array, path)(codes)
    assert (sa + 1).tolist() == oracle.naive_suffix_sort(s)
    lcp = pick(kernels.lcp_kasai, path)(np.frombuffer(s, dtype=np.uint8), sa)
    assert lcp.tolist() == naive_lcp(s, sa.tolist())


@pytest.mark.parametrize("path", PATHS)
def test_suffix_array_integer_alphabet(path):
    rng = np.random.default_rng(3)
    seq = rng.integers(0, 50, 300)
    sa = pick(kernels.suffix_array, path)(seq)
    expected = sorted(range(len(seq)), key=lambda i: seq[i:].tolist())
    assert sa.tolist() == expected


@pytest.mark.parametrize("path", PATHS)
def test_smaller_values(path):
    rng = np.random.default_rng(4)
    vals = rng.integers(-1, 5, 80)
    psv, nsv = pick(kernels.smaller_values, path)(vals)
    for k, v in enumerate(vals):
        left = [j for j in range(k) if vals[j] < v]
        right = [j for j in range(k + 1, len(vals)) if vals[j] < v]
        assert psv[k] == (left[-1] if left else -1)
        assert nsv[k] == (right[0] if right else len(vals))


@pytest.mark.parametrize("path", PATHS)
def test_rmq_report_matches_filter(path):
    rng = np.random.default_rng(5)
    vals = rng.integers(0, 100, 257)
    table = pick(kernels.argmax_table, path)(vals)
    for prefix in (0, 1, 2, 100, 257):
        for thr in (0, 50, 95, 101):
            out = np.empty(max(prefix, 1), dtype=np.int64)
            count, visited = pick(kernels.rmq_report, path)(vals, table, prefix, thr, out)
            assert sorted(out[:count].tolist()) == [i for i in range(prefix) if vals[i] >= thr]
            assert visited <= 2 * count + 1


@pytest.mark.parametrize("path", PATHS)
def test_range_tree_report(path):
    rng = np.random.default_rng(6)
    for width in (1, 2, 7, 64, 100):
        ys = rng.integers(1, 20, width)
        ys_lv, ids_lv = kernels.range_tree_build(ys)
        for _ in range(40):
            xa, xb = sorted(rng.integers(0, width, 2).tolist())
            ya, yb = sorted(rng.integers(0, 21, 2).tolist())
            out = np.empty(width, dtype=np.int64)
            count = pick(kernels.range_tree_report, path)(ys_lv, ids_lv, xa, xb, ya, yb, out)
            got = sorted(out[:count].tolist())
            assert got == [x for x in range(xa, xb + 1) if ya <= ys[x] <= yb]


@pytest.mark.parametrize("path", PATHS)
def test_parse_kernel(path):
    g = np.frombuffer(b"acgtgca", dtype=np.uint8)
    sa = kernels.suffix_array(g.astype(np.int64))
    doc = np.frombuffer(b"cgtgacgt", dtype=np.uint8)
    src = np.empty(8, dtype=np.int64)
    ln = np.empty(8, dtype=np.int64)
    count = pick(kernels.rlz_parse, path)(g, sa, doc, src, ln)
    assert count == 2
    assert list(zip((src[:2] + 1).tolist(), ln[:2].tolist())) == [(2, 4), (1, 4)]
    bad = np.frombuffer(b"cgn", dtype=np.uint8)
    assert pick(kernels.rlz_parse, path)(g, sa, bad, src, ln) == -3
