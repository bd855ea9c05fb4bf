"""Suffix-array index over the reference and its reverse.

Ranks and positions are 1-based at this API.  A :class:`SuffixInterval`
``[lo..hi]`` with ``lo > hi`` is empty; the empty string owns ``[1..n]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import kernels
from .errors import BuildError
from .sequence import as_symbols


class SuffixInterval(NamedTuple):
    lo: int
    hi: int

    @property
    def empty(self) -> bool:
        return self.lo > self.hi

    def __len__(self) -> int:
        return max(0, self.hi - self.lo + 1)


EMPTY = SuffixInterval(1, 0)


class SuffixOrder:
    """Suffix array, LCP with smaller-value links, and backward-search
    tables for a single text."""

    def __init__(self, text, sa=None, lcp=None):
        self.text = as_symbols(text)
        n = self.n = int(self.text.shape[0])
        codes = self.text.astype(np.int64)
        self.sa = kernels.suffix_array(codes) if sa is None else np.asarray(sa, dtype=np.int64)
        if lcp is None:
            lcp = kernels.lcp_kasai(self.text, self.sa)
        self.lcp = np.asarray(lcp, dtype=np.int64)

        # lcp_ext[k] = LCP(rank k-1, rank k) for k in 2..n; -1 at both ends
        ext = np.full(n + 2, -1, dtype=np.int64)
        ext[2:n + 1] = self.lcp[1:]
        self._lcp_ext = ext
        psv, nsv = kernels.smaller_values(ext)
        self._psv = psv
        self._nsv = nsv

        # extended rank 0 is the empty suffix, preceded by the last symbol
        prev = np.empty(n + 1, dtype=np.int64)
        prev[0] = codes[n - 1]
        before = self.sa - 1
        prev[1:] = np.where(before >= 0, codes[np.maximum(before, 0)], 256)
        counts = np.bincount(codes, minlength=256)
        self.C = np.concatenate(([0], np.cumsum(counts)))[:256]
        self.counts = counts
        order = np.argsort(prev, kind="stable")
        sorted_prev = prev[order]
        bounds = np.searchsorted(sorted_prev, np.arange(258))
        self._occ = {}
        for c in np.flatnonzero(counts):
            self._occ[int(c)] = order[bounds[c]:bounds[c + 1]]

    @property
    def full(self) -> SuffixInterval:
        return SuffixInterval(1, self.n)

    def _rank_c(self, c: int, j: int) -> int:
        # occurrences of c among extended ranks 0..j-1
        return int(np.searchsorted(self._occ[c], j))

    def extend_left(self, iv: SuffixInterval, c: int, x_len: int | None = None) -> SuffixInterval:
        if iv.empty or c not in self._occ:
            return EMPTY
        if x_len is None:
            x_len = 0 if iv == self.full else 1
        lo = 0 if x_len == 0 else iv.lo
        base = int(self.C[c])
        new = SuffixInterval(base + self._rank_c(c, lo) + 1, base + self._rank_c(c, iv.hi + 1))
        return new if not new.empty else EMPTY

    def parent_depth(self, iv: SuffixInterval) -> int:
        """Longest proper prefix length at which ``iv`` widens (-1 at the root)."""
        return int(max(self._lcp_ext[iv.lo], self._lcp_ext[iv.hi + 1]))

    def contract_right(self, iv: SuffixInterval, target_len: int) -> SuffixInterval:
        lo, hi = iv.lo, iv.hi
        ext, psv, nsv = self._lcp_ext, self._psv, self._nsv
        while True:
            left = ext[lo]
            right = ext[hi + 1]
            depth = left if left > right else right
            if depth < target_len:
                return SuffixInterval(int(lo), int(hi))
            if left == depth:
                lo = psv[lo]
            if right == depth:
                hi = nsv[hi + 1] - 1

    def interval_of(self, x) -> SuffixInterval:
        x = as_symbols(x)
        iv = self.full
        for k in range(x.shape[0] - 1, -1, -1):
            iv = self.extend_left(iv, int(x[k]), x.shape[0] - 1 - k)
            if iv.empty:
                return EMPTY
        return iv

    def locate(self, iv: SuffixInterval) -> list[int]:
        if iv.empty:
            return []
        return sorted((self.sa[iv.lo - 1:iv.hi] + 1).tolist())


@dataclass(frozen=True)
class MatchStats:
    """Matching statistics of a pattern against the reference.

    Both lists are 1-based (slot 0 unused): ``ell[i]`` is the end (exclusive)
    of the longest prefix of ``P[i..m]`` occurring in G, and ``iv[i]`` the
    suffix interval of that prefix.
    """

    ell: list
    iv: list

    @property
    def m(self) -> int:
        return len(self.ell) - 1


class ReferenceIndex:
    """Index over G (forward) and G^R (reverse)."""

    def __init__(self, fwd: SuffixOrder, rev: SuffixOrder):
        self.fwd = fwd
        self.rev = rev
        self.text = fwd.text
        self.n = fwd.n
        self.alphabet = np.flatnonzero(fwd.counts).astype(np.uint8)
        self.sigma = int(self.alphabet.shape[0])

    @classmethod
    def from_arrays(cls, text, sa, lcp, rev_sa, rev_lcp) -> "ReferenceIndex":
        text = as_symbols(text)
        return cls(SuffixOrder(text, sa, lcp), SuffixOrder(text[::-1].copy(), rev_sa, rev_lcp))

    def _order(self, reversed: bool) -> SuffixOrder:
        return self.rev if reversed else self.fwd

    def has_symbol(self, c: int) -> bool:
        return bool(self.fwd.counts[c])

    def interval_of(self, x, reversed: bool = False) -> SuffixInterval:
        return self._order(reversed).interval_of(x)

    def locate(self, iv: SuffixInterval) -> list[int]:
        return self.fwd.locate(iv)

    def extend_left(self, iv, c, x_len=None, reversed=False) -> SuffixInterval:
        """Interval of cX from the interval of X.

        ``x_len`` disambiguates the empty string from a nonempty X that also
        spans every suffix; when omitted, a full interval is taken as empty X.
        """
        return self._order(reversed).extend_left(iv, int(c), x_len)

    def contract_right(self, iv, target_len, reversed=False) -> SuffixInterval:
        return self._order(reversed).contract_right(iv, target_len)

    def matching_statistics(self, pattern) -> MatchStats:
        p = as_symbols(pattern)
        m = int(p.shape[0])
        fwd = self.fwd
        ell = [0] * (m + 1)
        ivs = [None] * (m + 1)
        cur = fwd.full
        matched = 0
        for i in range(m, 0, -1):
            c = int(p[i - 1])
            while True:
                nxt = fwd.extend_left(cur, c, matched)
                if not nxt.empty:
                    cur = nxt
                    matched += 1
                    break
                if matched == 0:
                    break
                matched = max(fwd.parent_depth(cur), 0)
                cur = fwd.contract_right(cur, matched)
            ell[i] = i + matched
            ivs[i] = cur
        return MatchStats(ell, ivs)

    def reversed_prefix_intervals(self, pattern) -> list:
        """``out[i]`` = G^R interval of (P[1..i-1])^R for i in 2..m+1."""
        p = as_symbols(pattern)
        m = int(p.shape[0])
        out = [None] * (m + 2)
        cur = self.rev.full
        for i in range(2, m + 2):
            cur = self.rev.extend_left(cur, int(p[i - 2]), i - 2)
            out[i] = cur
        return out


def build_reference_index(g) -> ReferenceIndex:
    g = as_symbols(g)
    if g.shape[0] == 0:
        raise BuildError("reference must be non-empty")
    return ReferenceIndex(SuffixOrder(g), SuffixOrder(g[::-1].copy()))
