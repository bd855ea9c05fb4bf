"""Brute-force reference implementations for tests.

Everything here works directly on byte strings with slicing and ``find``;
nothing is shared with the index code.  Positions are 1-based.
"""
from __future__ import annotations

from typing import NamedTuple

from .errors import MissingSymbol


class NaiveHit(NamedTuple):
    doc: int                 # 0 for the reference
    offset: int
    spans_boundary: bool
    containing_phrase: int | None   # index of the phrase within its document


def _b(s) -> bytes:
    return s.encode("latin-1") if isinstance(s, str) else bytes(s)


def naive_parse(g, doc) -> list[tuple[int, int]]:
    """Greedy parse: at each position take the longest prefix found in g,
    sourced at its leftmost occurrence."""
    g, doc = _b(g), _b(doc)
    out = []
    pos = 0
    while pos < len(doc):
        length = 0
        src = -1
        while pos + length < len(doc):
            at = g.find(doc[pos:pos + length + 1])
            if at < 0:
                break
            length += 1
            src = at
        if length == 0:
            raise MissingSymbol(pos + 1, doc[pos])
        out.append((src + 1, length))
        pos += length
    return out


def occurrences(text, pattern) -> list[int]:
    text, pattern = _b(text), _b(pattern)
    if not pattern:
        return []
    out = []
    at = text.find(pattern)
    while at >= 0:
        out.append(at + 1)
        at = text.find(pattern, at + 1)
    return out


def naive_search(g, docs, pattern, parses=None) -> list[NaiveHit]:
    """All occurrences of ``pattern`` in g (doc 0) and in each document,
    classified against the greedy parse."""
    m = len(_b(pattern))
    hits = [NaiveHit(0, x, False, None) for x in occurrences(g, pattern)]
    for d, doc in enumerate(docs, 1):
        phrases = parses[d - 1] if parses is not None else naive_parse(g, doc)
        starts = []
        s = 1
        for _, length in phrases:
            starts.append(s)
            s += length
        for off in occurrences(doc, pattern):
            # phrase holding the first symbol
            k = max(b for b, st in enumerate(starts) if st <= off)
            end = starts[k] + phrases[k][1] - 1
            inside = off + m - 1 <= end
            hits.append(NaiveHit(d, off, not inside, k if inside else None))
    return hits


def naive_suffix_sort(s) -> list[int]:
    """1-based suffix start positions in lexicographic order (shorter first on ties)."""
    s = _b(s)
    return sorted(range(1, len(s) + 1), key=lambda i: s[i - 1:])


def naive_interval(s, x) -> tuple[int, int]:
    """1-based rank interval of suffixes of s prefixed by x; (1, 0) when absent."""
    s, x = _b(s), _b(x)
    order = naive_suffix_sort(s)
    ranks = [k + 1 for k, i in enumerate(order) if s[i - 1:].startswith(x)]
    return (ranks[0], ranks[-1]) if ranks else (1, 0)


def naive_matching_statistics(g, pattern) -> list[int]:
    """ell[i] for i in 1..m (slot 0 unused): end of the longest prefix of
    P[i..m] that occurs in g."""
    g, p = _b(g), _b(pattern)
    ell = [0]
    for i in range(len(p)):
        k = 0
        while i + k < len(p) and p[i:i + k + 1] in g:
            k += 1
        ell.append(i + 1 + k)
    return ell
