"""Boundary grid: occurrences that cross at least one phrase boundary.

A crossing occurrence is charged to its first internal boundary.  If that
boundary sits before pattern position i, the phrase ending there must end
with P[1..i-1] (a prefix query over reversed phrases, the y axis) and the
phrases starting there must spell the greedy parse of P[i..m] (an interval
over the phrase-rank sequence R, the x axis).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .reference_index import EMPTY, MatchStats, ReferenceIndex
from .reference_index import SuffixInterval as Interval
from .rlz_parser import Parse, PhraseDict, phrase_keys


@dataclass(frozen=True)
class RSequence:
    """Phrase ranks in text order, a 0 after each document, with
    backward-search support restricted to boundary suffixes."""

    syms: np.ndarray
    x_pos: np.ndarray        # R position of the boundary suffix with rank x (0-based x)
    C: np.ndarray            # C[f]: boundary suffixes whose first rank is < f
    Z: np.ndarray            # Z[f]: boundary suffixes of the form (f, 0, ...)
    occ_ptr: np.ndarray
    occ_x: np.ndarray        # 1-based x ranks grouped by preceding phrase rank

    @property
    def n_boundaries(self) -> int:
        return int(self.x_pos.shape[0])

    def r_interval(self, dr: Interval) -> Interval:
        """Boundary suffixes whose first phrase rank lies in ``dr``."""
        if dr.empty:
            return EMPTY
        iv = Interval(int(self.C[dr.lo]) + 1, int(self.C[dr.hi + 1]))
        return iv if not iv.empty else EMPTY

    def _occ(self, f: int, k: int) -> int:
        block = self.occ_x[self.occ_ptr[f]:self.occ_ptr[f + 1]]
        return int(np.searchsorted(block, k, side="right"))

    def backward_step(self, iv: Interval, f) -> Interval:
        """From the interval of phrase string W to that of f.W."""
        if iv.empty or f is None:
            return EMPTY
        base = int(self.C[f] + self.Z[f])
        new = Interval(base + self._occ(f, iv.lo - 1) + 1, base + self._occ(f, iv.hi))
        return new if not new.empty else EMPTY


@dataclass(frozen=True)
class BoundaryGrid:
    """One point per internal boundary: x = boundary-suffix rank,
    y = reversed-dictionary rank of the phrase ending there."""

    phrase_by_x: np.ndarray  # global index of the phrase starting at the boundary
    y_by_x: np.ndarray       # 1-based
    ys_levels: np.ndarray
    ids_levels: np.ndarray

    def __len__(self) -> int:
        return int(self.phrase_by_x.shape[0])

    @property
    def points(self) -> list[tuple[int, int, int]]:
        return [(x + 1, int(y), int(b)) for x, (y, b) in
                enumerate(zip(self.y_by_x, self.phrase_by_x))]


def _r_sequence(parse: Parse, ranks: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # R with a 0 after each document, and the R position of each phrase
    doc = parse.doc_of_phrase()
    r_pos = np.arange(parse.r, dtype=np.int64) + (doc - 1)
    syms = np.zeros(parse.r + parse.n_docs, dtype=np.int64)
    syms[r_pos] = ranks
    return syms, r_pos


def build_r_sequence(syms: np.ndarray, d: int, x_pos=None) -> RSequence:
    syms = np.asarray(syms, dtype=np.int64)
    if x_pos is None:
        prev = np.concatenate(([0], syms[:-1]))
        is_boundary = (syms != 0) & (prev != 0)
        sa = kernels.suffix_array(syms)
        x_pos = sa[is_boundary[sa]]
    x_pos = np.asarray(x_pos, dtype=np.int64)
    first = syms[x_pos]
    C = np.zeros(d + 2, dtype=np.int64)
    np.cumsum(np.bincount(first, minlength=d + 1)[:d + 1], out=C[1:])
    nxt = np.concatenate((syms[1:], [0]))
    Z = np.bincount(first[nxt[x_pos] == 0], minlength=d + 1).astype(np.int64)
    # preceding phrase counts only if its own suffix is a boundary suffix
    before = x_pos - 1
    before2 = x_pos - 2
    ok = (before2 >= 0) & (syms[np.maximum(before2, 0)] != 0)
    bwt = np.where(ok, syms[before], 0)
    xs = np.arange(1, x_pos.shape[0] + 1, dtype=np.int64)
    order = np.lexsort((xs, bwt))
    occ_ptr = np.searchsorted(bwt[order], np.arange(d + 2)).astype(np.int64)
    return RSequence(syms, x_pos, C, Z, occ_ptr, xs[order])


def reversed_source(n: int, src, lens) -> np.ndarray:
    """1-based G^R start of each reversed phrase."""
    return n - (np.asarray(src) + np.asarray(lens) - 1) + 1


def build_reversed_dict(idx: ReferenceIndex, parse: Parse) -> tuple[PhraseDict, np.ndarray]:
    keys = phrase_keys(idx.rev, reversed_source(idx.n, parse.src, parse.lens), parse.lens)
    rdict = PhraseDict(np.unique(keys), idx.n)
    return rdict, rdict.ranks(keys)


def build_boundary_grid(phrase_by_x, y_by_x) -> BoundaryGrid:
    phrase_by_x = np.asarray(phrase_by_x, dtype=np.int64)
    y_by_x = np.asarray(y_by_x, dtype=np.int64)
    ys_levels, ids_levels = kernels.range_tree_build(y_by_x)
    return BoundaryGrid(phrase_by_x, y_by_x, ys_levels, ids_levels)


@dataclass(frozen=True)
class PrimaryIndex:
    ref: ReferenceIndex
    parse: Parse
    dict: PhraseDict
    rdict: PhraseDict
    rseq: RSequence
    grid: BoundaryGrid


def build_primary(idx: ReferenceIndex, parse: Parse, pdict: PhraseDict) -> PrimaryIndex:
    ranks = pdict.ranks(phrase_keys(idx.fwd, parse.src, parse.lens))
    syms, r_pos = _r_sequence(parse, ranks)
    rseq = build_r_sequence(syms, pdict.d)
    rdict, rranks = build_reversed_dict(idx, parse)
    return assemble_primary(idx, parse, pdict, rdict, rseq, r_pos, rranks)


def assemble_primary(idx, parse, pdict, rdict, rseq, r_pos=None, rranks=None) -> PrimaryIndex:
    if r_pos is None:
        r_pos = np.arange(parse.r, dtype=np.int64) + (parse.doc_of_phrase() - 1)
    if rranks is None:
        keys = phrase_keys(idx.rev, reversed_source(idx.n, parse.src, parse.lens), parse.lens)
        rranks = rdict.ranks(keys)
    phrase_at = np.full(rseq.syms.shape[0], -1, dtype=np.int64)
    phrase_at[r_pos] = np.arange(parse.r, dtype=np.int64)
    phrase_by_x = phrase_at[rseq.x_pos]
    y_by_x = rranks[phrase_by_x - 1] if phrase_by_x.shape[0] else np.empty(0, dtype=np.int64)
    grid = build_boundary_grid(phrase_by_x, y_by_x)
    return PrimaryIndex(idx, parse, pdict, rdict, rseq, grid)


def phrase_interval(idx: ReferenceIndex, pdict: PhraseDict, g_iv: Interval, min_len: int) -> Interval:
    """Dictionary ranks of phrases beginning with the string whose
    reference interval is ``g_iv`` and whose length is ``min_len``."""
    if g_iv.empty:
        return EMPTY
    n = idx.n
    iv = Interval(*pdict.key_range(g_iv.lo * n + min_len, g_iv.hi * n + n))
    return iv if not iv.empty else EMPTY


def exact_phrase_rank(idx: ReferenceIndex, pdict: PhraseDict, g_iv: Interval, length: int):
    if g_iv.empty or length < 1:
        return None
    return pdict.rank_of(g_iv.lo * idx.n + length)


def reversed_phrase_interval(idx: ReferenceIndex, rdict: PhraseDict, riv: Interval, min_len: int) -> Interval:
    return phrase_interval(idx, rdict, riv, min_len)


def pattern_suffix_intervals(idx, pdict, rseq: RSequence, pattern, ms: MatchStats) -> list:
    """``out[i]`` (i in 2..m) is the interval of boundary suffixes whose
    phrases realise P[i..m]."""
    m = ms.m
    out = [None] * (m + 1)
    for i in range(m, 1, -1):
        end = ms.ell[i]
        if end == m + 1:
            out[i] = rseq.r_interval(phrase_interval(idx, pdict, ms.iv[i], m - i + 1))
        else:
            f = exact_phrase_rank(idx, pdict, ms.iv[i], end - i)
            out[i] = rseq.backward_step(out[end], f) if f is not None else EMPTY
    return out


def grid_report(grid: BoundaryGrid, xr: Interval, yr: Interval) -> list[int]:
    """Phrase indices of boundaries with x in ``xr`` and y in ``yr``."""
    if xr.empty or yr.empty or not len(grid):
        return []
    out = np.empty(xr.hi - xr.lo + 1, dtype=np.int64)
    count = kernels.range_tree_report(grid.ys_levels, grid.ids_levels,
                                      xr.lo - 1, xr.hi - 1, yr.lo, yr.hi, out)
    return grid.phrase_by_x[out[:count]].tolist()


def primary_occurrences(pi: PrimaryIndex, pattern, ms: MatchStats | None = None) -> list[tuple[int, int]]:
    idx = pi.ref
    m = len(pattern)
    if m < 2 or not len(pi.grid):
        return []
    if ms is None:
        ms = idx.matching_statistics(pattern)
    xs = pattern_suffix_intervals(idx, pi.dict, pi.rseq, pattern, ms)
    rivs = idx.reversed_prefix_intervals(pattern)
    out = []
    for i in range(2, m + 1):
        if xs[i].empty or rivs[i].empty:
            continue
        yr = reversed_phrase_interval(idx, pi.rdict, rivs[i], i - 1)
        for b in grid_report(pi.grid, xs[i], yr):
            out.append(pi.parse.to_local(int(pi.parse.text_start[b]) - (i - 1)))
    return sorted(out)
