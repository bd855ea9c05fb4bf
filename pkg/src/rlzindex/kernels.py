"""Numeric kernels: suffix sorting, LCP, greedy parsing and grid reporting.

Every function here is decorated with :func:`rlzindex._accel.kernel`, so it
is numba-compiled when available and plain numpy otherwise.  All positions
and ranks are 0-based at this level.
"""
from __future__ import annotations

import numpy as np

from ._accel import kernel


@kernel
def suffix_array(text):
    """Prefix-doubling suffix sort of an integer sequence.

    A suffix that is a proper prefix of another sorts first.  Returns the
    0-based start positions in lexicographic order.
    """
    n = text.shape[0]
    if n == 0:
        return np.empty(0, dtype=np.int64)
    # dense ranks starting at 1 so that 0 can mark "past the end"
    sa = np.argsort(text, kind="mergesort")
    rank = np.empty(n, dtype=np.int64)
    r = 1
    rank[sa[0]] = 1
    for t in range(1, n):
        if text[sa[t]] != text[sa[t - 1]]:
            r += 1
        rank[sa[t]] = r
    k = 1
    while r < n:
        second = np.zeros(n, dtype=np.int64)
        second[: n - k] = rank[k:]
        key = rank * (n + 1) + second
        sa = np.argsort(key, kind="mergesort")
        new_rank = np.empty(n, dtype=np.int64)
        r = 1
        new_rank[sa[0]] = 1
        for t in range(1, n):
            if key[sa[t]] != key[sa[t - 1]]:
                r += 1
            new_rank[sa[t]] = r
        rank = new_rank
        k *= 2
        if k >= n:
            break
    return sa.astype(np.int64)


@kernel
def lcp_kasai(text, sa):
    """lcp[k] = LCP of suffixes sa[k-1] and sa[k]; lcp[0] = -1."""
    n = text.shape[0]
    inv = np.empty(n, dtype=np.int64)
    for k in range(n):
        inv[sa[k]] = k
    lcp = np.zeros(n, dtype=np.int64)
    if n > 0:
        lcp[0] = -1
    h = 0
    for i in range(n):
        k = inv[i]
        if k == 0:
            h = 0
            continue
        j = sa[k - 1]
        while i + h < n and j + h < n and text[i + h] == text[j + h]:
            h += 1
        lcp[k] = h
        if h > 0:
            h -= 1
    return lcp


@kernel
def smaller_values(values):
    """Previous- and next-smaller-value indices (strictly smaller).

    psv[k] = largest j < k with values[j] < values[k], or -1.
    nsv[k] = smallest j > k with values[j] < values[k], or len(values).
    """
    n = values.shape[0]
    psv = np.empty(n, dtype=np.int64)
    nsv = np.empty(n, dtype=np.int64)
    stack = np.empty(n, dtype=np.int64)
    top = 0
    for k in range(n):
        while top > 0 and values[stack[top - 1]] >= values[k]:
            top -= 1
        psv[k] = stack[top - 1] if top > 0 else -1
        stack[top] = k
        top += 1
    top = 0
    for k in range(n - 1, -1, -1):
        while top > 0 and values[stack[top - 1]] >= values[k]:
            top -= 1
        nsv[k] = stack[top - 1] if top > 0 else n
        stack[top] = k
        top += 1
    return psv, nsv


@kernel
def _narrow(g, sa, lo, hi, depth, c):
    # sub-range of sa[lo:hi] whose suffixes carry symbol c at offset depth
    n = g.shape[0]
    a = lo
    b = hi
    while a < b:
        mid = (a + b) // 2
        p = sa[mid] + depth
        s = -1 if p >= n else np.int64(g[p])
        if s < c:
            a = mid + 1
        else:
            b = mid
    start = a
    b = hi
    while a < b:
        mid = (a + b) // 2
        p = sa[mid] + depth
        s = -1 if p >= n else np.int64(g[p])
        if s <= c:
            a = mid + 1
        else:
            b = mid
    return start, a


@kernel
def rlz_parse(g, sa, doc, out_src, out_len):
    """Greedy parse of ``doc`` into longest substrings of ``g``.

    Writes (leftmost source position, length) pairs into the output buffers
    and returns the phrase count, or ``-(pos + 1)`` when ``doc[pos]`` does not
    occur in ``g``.
    """
    n = g.shape[0]
    m = doc.shape[0]
    pos = 0
    count = 0
    while pos < m:
        lo = 0
        hi = n
        depth = 0
        while pos + depth < m:
            a, b = _narrow(g, sa, lo, hi, depth, np.int64(doc[pos + depth]))
            if a >= b:
                break
            lo = a
            hi = b
            depth += 1
        if depth == 0:
            return -(pos + 1)
        src = sa[lo]
        for k in range(lo + 1, hi):
            if sa[k] < src:
                src = sa[k]
        out_src[count] = src
        out_len[count] = depth
        count += 1
        pos += depth
    return count


@kernel
def argmax_table(values):
    """Sparse table: row l holds the index of the leftmost maximum of
    values[i : i + 2**l] at column i."""
    n = values.shape[0]
    levels = 1
    while (1 << levels) <= n:
        levels += 1
    table = np.zeros((levels, n), dtype=np.int64)
    for i in range(n):
        table[0, i] = i
    for lvl in range(1, levels):
        half = 1 << (lvl - 1)
        for i in range(n - (1 << lvl) + 1):
            a = table[lvl - 1, i]
            b = table[lvl - 1, i + half]
            table[lvl, i] = a if values[a] >= values[b] else b
    return table


@kernel
def _argmax(values, table, a, b):
    lvl = 0
    while (2 << lvl) <= b - a + 1:
        lvl += 1
    x = table[lvl, a]
    y = table[lvl, b - (1 << lvl) + 1]
    return x if values[x] >= values[y] else y


@kernel
def rmq_report(values, table, prefix, threshold, out):
    """Indices i < prefix with values[i] >= threshold, by recursive
    range-maximum splitting.

    Returns (count, visited ranges); visited never exceeds 2 * count + 1.
    """
    count = 0
    visited = 0
    if prefix <= 0:
        return count, visited
    stack_a = np.empty(prefix + 2, dtype=np.int64)
    stack_b = np.empty(prefix + 2, dtype=np.int64)
    stack_a[0] = 0
    stack_b[0] = prefix - 1
    top = 1
    while top > 0:
        top -= 1
        a = stack_a[top]
        b = stack_b[top]
        visited += 1
        k = _argmax(values, table, a, b)
        if values[k] < threshold:
            continue
        out[count] = k
        count += 1
        if k + 1 <= b:
            stack_a[top] = k + 1
            stack_b[top] = b
            top += 1
        if a <= k - 1:
            stack_a[top] = a
            stack_b[top] = k - 1
            top += 1
    return count, visited


@kernel
def _report_block(ys, ids, s, e, ya, yb, out, count):
    a = s
    b = e
    while a < b:
        mid = (a + b) // 2
        if ys[mid] < ya:
            a = mid + 1
        else:
            b = mid
    k = a
    while k < e and ys[k] <= yb:
        out[count] = ids[k]
        count += 1
        k += 1
    return count


@kernel
def range_tree_report(ys_levels, ids_levels, xa, xb, ya, yb, out):
    """Report ids of points with x in [xa, xb] and y in [ya, yb].

    ``ys_levels[l]`` holds the y values sorted within aligned x-blocks of
    width 2**l; ``ids_levels[l]`` the matching x coordinates.
    """
    width = ys_levels.shape[1]
    count = 0
    if xa > xb or ya > yb or width == 0:
        return count
    a = xa
    b = xb + 1
    lvl = 0
    while a < b:
        if a & 1:
            e = (a + 1) << lvl
            count = _report_block(ys_levels[lvl], ids_levels[lvl], a << lvl,
                                  e if e < width else width, ya, yb, out, count)
            a += 1
        if b & 1:
            b -= 1
            e = (b + 1) << lvl
            count = _report_block(ys_levels[lvl], ids_levels[lvl], b << lvl,
                                  e if e < width else width, ya, yb, out, count)
        a >>= 1
        b >>= 1
        lvl += 1
    return count


def range_tree_build(ys):
    """Level arrays for :func:`range_tree_report` (numpy only, build time)."""
    ys = np.asarray(ys, dtype=np.int64)
    width = ys.shape[0]
    n_levels = max(1, int(width).bit_length())
    ys_levels = np.empty((n_levels, width), dtype=np.int64)
    ids_levels = np.empty((n_levels, width), dtype=np.int64)
    xs = np.arange(width, dtype=np.int64)
    for lvl in range(n_levels):
        order = np.lexsort((xs, ys, xs >> lvl))
        ys_levels[lvl] = ys[order]
        ids_levels[lvl] = order
    return ys_levels, ids_levels
