"""The assembled index: locate, count, extract and stats."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidPattern, OutOfRange
from .primary_index import PrimaryIndex, build_primary, primary_occurrences
from .reference_index import ReferenceIndex, build_reference_index
from .rlz_parser import Parse, PhraseDict, build_dict, parse_collection
from .secondary_index import SourceGrid, build_source_grid, secondary_occurrences
from .sequence import as_symbols

PRIMARY = "primary"
SECONDARY = "secondary"


@dataclass(frozen=True)
class QueryResult:
    ref_hits: list[int]
    text_hits: list[tuple[int, int, str]] = field(default_factory=list)

    @property
    def counts(self) -> tuple[int, int, int]:
        occ1 = sum(1 for h in self.text_hits if h[2] == PRIMARY)
        return len(self.ref_hits), occ1, len(self.text_hits) - occ1

    def of_kind(self, kind: str) -> list[tuple[int, int]]:
        return [(d, o) for d, o, k in self.text_hits if k == kind]


class RLZIndex:
    """Self-index over a reference G and a collection of documents T."""

    def __init__(self, ref: ReferenceIndex, primary: PrimaryIndex, sgrid: SourceGrid,
                 names: list[str] | None = None):
        self.ref = ref
        self.primary = primary
        self.sgrid = sgrid
        self.parse: Parse = primary.parse
        self.dict: PhraseDict = primary.dict
        n_docs = self.parse.n_docs
        self.names = list(names) if names is not None else [f"doc{k + 1}" for k in range(n_docs)]

    @classmethod
    def build(cls, reference, docs, names=None, workers: int = 1) -> "RLZIndex":
        ref = build_reference_index(reference)
        parse = parse_collection(ref, docs, workers=workers)
        pdict = build_dict(ref, parse)
        return cls(ref, build_primary(ref, parse, pdict), build_source_grid(parse), names)

    @property
    def n(self) -> int:
        return self.ref.n

    @property
    def N(self) -> int:
        return self.parse.N

    @property
    def r(self) -> int:
        return self.parse.r

    @property
    def d(self) -> int:
        return self.dict.d

    def locate(self, pattern) -> QueryResult:
        p = as_symbols(pattern)
        m = int(p.shape[0])
        if m == 0:
            raise InvalidPattern("pattern must be non-empty")
        if not all(self.ref.has_symbol(int(c)) for c in np.unique(p)):
            return QueryResult([], [])
        ref_hits = self.ref.locate(self.ref.interval_of(p)) if m <= self.n else []
        hits = [(d, o, SECONDARY) for d, o in
                secondary_occurrences(self.sgrid, self.parse, ref_hits, m)]
        if self.parse.r:
            hits += [(d, o, PRIMARY) for d, o in primary_occurrences(self.primary, p)]
        hits.sort()
        return QueryResult(ref_hits, hits)

    def count(self, pattern) -> tuple[int, int, int]:
        return self.locate(pattern).counts

    def doc_length(self, doc: int) -> int:
        if not 1 <= doc <= self.parse.n_docs:
            raise OutOfRange(f"no document {doc}")
        return int(self.parse.doc_lengths[doc - 1])

    def extract(self, doc: int, start: int, length: int) -> bytes:
        """Substring of document ``doc`` (1-based offset) copied from G."""
        size = self.doc_length(doc)
        if start < 1 or length < 0 or start + length - 1 > size:
            raise OutOfRange(f"[{start}..{start + length - 1}] outside document {doc} of length {size}")
        if length == 0:
            return b""
        parse = self.parse
        first = int(parse.doc_starts[doc - 1]) + start - 1
        last = first + length - 1
        b = int(np.searchsorted(parse.text_start, first, side="right")) - 1
        g = self.ref.text
        out = bytearray()
        pos = first
        while pos <= last:
            ts = int(parse.text_start[b])
            s = int(parse.src[b]) - 1 + (pos - ts)
            take = min(int(parse.lens[b]) - (pos - ts), last - pos + 1)
            out += g[s:s + take].tobytes()
            pos += take
            b += 1
        return bytes(out)

    def document(self, doc: int) -> bytes:
        return self.extract(doc, 1, self.doc_length(doc))

    def stats(self) -> dict:
        from .index_io import section_sizes

        lens = self.parse.lens
        if lens.shape[0]:
            dist = {"min": int(lens.min()), "max": int(lens.max()),
                    "mean": float(lens.mean()), "median": float(np.median(lens))}
        else:
            dist = {"min": 0, "max": 0, "mean": 0.0, "median": 0.0}
        return {"n": self.n, "N": self.N, "r": self.r, "d": self.d,
                "docs": self.parse.n_docs, "sigma": self.ref.sigma,
                "phrase_length": dist, "sections": section_sizes(self)}


def locate(index: RLZIndex, pattern) -> QueryResult:
    return index.locate(pattern)


def count(index: RLZIndex, pattern) -> tuple[int, int, int]:
    return index.count(pattern)


def extract(index: RLZIndex, doc: int, start: int, length: int) -> bytes:
    return index.extract(doc, start, length)


def stats(index: RLZIndex) -> dict:
    return index.stats()
