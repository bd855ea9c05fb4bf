"""Greedy relative Lempel-Ziv parsing of documents against the reference."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import kernels
from .errors import MissingSymbol
from .reference_index import ReferenceIndex, SuffixInterval
from .sequence import as_symbols


class Phrase(NamedTuple):
    src_start: int  # 1-based position in G
    len: int


@dataclass(frozen=True)
class Parse:
    """Phrases of every document, in text order.

    ``src`` and ``lens`` are parallel int64 arrays (``src`` 1-based);
    ``text_start[b]`` is the 1-based global position of phrase b;
    ``doc_phrase_start`` has one entry per document plus a final r.
    """

    src: np.ndarray
    lens: np.ndarray
    text_start: np.ndarray
    doc_phrase_start: np.ndarray
    doc_lengths: np.ndarray

    @property
    def r(self) -> int:
        return int(self.src.shape[0])

    @property
    def N(self) -> int:
        return int(self.doc_lengths.sum())

    @property
    def n_docs(self) -> int:
        return int(self.doc_lengths.shape[0])

    @property
    def phrases(self) -> list[Phrase]:
        return [Phrase(int(s), int(k)) for s, k in zip(self.src, self.lens)]

    @property
    def doc_starts(self) -> np.ndarray:
        """1-based global start of every document."""
        return np.concatenate(([1], 1 + np.cumsum(self.doc_lengths)[:-1])).astype(np.int64)

    @property
    def doc_bounds(self) -> list[tuple[int, int, int]]:
        return [(d + 1, int(s), int(k)) for d, (s, k) in
                enumerate(zip(self.doc_starts, self.doc_lengths))]

    def doc_of_phrase(self) -> np.ndarray:
        """1-based document id of every phrase."""
        counts = np.diff(self.doc_phrase_start)
        return np.repeat(np.arange(1, self.n_docs + 1, dtype=np.int64), counts)

    def to_local(self, global_pos: int) -> tuple[int, int]:
        """Map a 1-based global text position to (doc id, 1-based offset)."""
        starts = self.doc_starts
        d = int(np.searchsorted(starts, global_pos, side="right")) - 1
        return d + 1, int(global_pos - starts[d] + 1)

    @classmethod
    def from_arrays(cls, src, lens, doc_phrase_counts, doc_lengths) -> "Parse":
        src = np.asarray(src, dtype=np.int64)
        lens = np.asarray(lens, dtype=np.int64)
        doc_lengths = np.asarray(doc_lengths, dtype=np.int64)
        text_start = np.ones(lens.shape[0], dtype=np.int64)
        if lens.shape[0]:
            text_start[1:] = 1 + np.cumsum(lens)[:-1]
        dps = np.concatenate(([0], np.cumsum(np.asarray(doc_phrase_counts, dtype=np.int64))))
        return cls(src, lens, text_start, dps.astype(np.int64), doc_lengths)


def rlz_parse(idx: ReferenceIndex, doc) -> list[Phrase]:
    """Greedy leftmost-maximal parse; each phrase names its leftmost source."""
    src, lens = _parse_arrays(idx, as_symbols(doc))
    return [Phrase(int(s), int(k)) for s, k in zip(src, lens)]


def _parse_arrays(idx: ReferenceIndex, doc: np.ndarray, doc_id=None):
    m = int(doc.shape[0])
    out_src = np.empty(m, dtype=np.int64)
    out_len = np.empty(m, dtype=np.int64)
    count = kernels.rlz_parse(idx.text, idx.fwd.sa, doc, out_src, out_len)
    if count < 0:
        pos = -count
        raise MissingSymbol(pos, int(doc[pos - 1]), doc_id)
    return out_src[:count] + 1, out_len[:count].copy()


def parse_collection(idx: ReferenceIndex, docs, workers: int = 1) -> Parse:
    docs = [as_symbols(d) for d in docs]
    jobs = [(d, k + 1) for k, d in enumerate(docs)]
    if workers > 1 and len(docs) > 1:
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(lambda job: _parse_arrays(idx, *job), jobs))
    else:
        parts = [_parse_arrays(idx, *job) for job in jobs]
    if parts:
        src = np.concatenate([p[0] for p in parts])
        lens = np.concatenate([p[1] for p in parts])
    else:
        src = np.empty(0, dtype=np.int64)
        lens = np.empty(0, dtype=np.int64)
    return Parse.from_arrays(src, lens, [p[0].shape[0] for p in parts],
                             [d.shape[0] for d in docs])


def phrase_key(idx: ReferenceIndex, ph: Phrase) -> int:
    """``q*n + k`` with q the rank of the smallest G-suffix starting with the phrase."""
    s, k = ph
    iv = idx.interval_of(idx.text[s - 1:s - 1 + k])
    return iv.lo * idx.n + k


def phrase_keys(order, src, lens) -> np.ndarray:
    """Vectorised :func:`phrase_key` for many phrases against one suffix order.

    The smallest suffix sharing the phrase is found by walking left from the
    source's own rank while the LCP stays >= the phrase length.
    """
    n = order.n
    inv = np.empty(n, dtype=np.int64)
    inv[order.sa] = np.arange(1, n + 1, dtype=np.int64)
    keys = np.empty(len(src), dtype=np.int64)
    for b, (s, k) in enumerate(zip(np.asarray(src).tolist(), np.asarray(lens).tolist())):
        rank = int(inv[s - 1])
        iv = order.contract_right(SuffixInterval(rank, rank), k)
        keys[b] = iv.lo * n + k
    return keys


@dataclass(frozen=True)
class PhraseDict:
    """Sorted distinct phrase keys; ranks are 1-based positions in ``keys``."""

    keys: np.ndarray
    n: int

    @property
    def d(self) -> int:
        return int(self.keys.shape[0])

    def rank_of(self, key: int) -> int | None:
        k = int(np.searchsorted(self.keys, key))
        if k < self.keys.shape[0] and self.keys[k] == key:
            return k + 1
        return None

    def ranks(self, keys) -> np.ndarray:
        return np.searchsorted(self.keys, keys).astype(np.int64) + 1

    def key_range(self, lo_key: int, hi_key: int) -> tuple[int, int]:
        """1-based rank interval of stored keys within [lo_key, hi_key]."""
        a = int(np.searchsorted(self.keys, lo_key, side="left"))
        b = int(np.searchsorted(self.keys, hi_key, side="right"))
        return a + 1, b


def build_dict(idx: ReferenceIndex, parse: Parse) -> PhraseDict:
    keys = phrase_keys(idx.fwd, parse.src, parse.lens)
    return PhraseDict(np.unique(keys), idx.n)
