"""Source-containment grid: occurrences that lie inside a single phrase."""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import kernels
from .rlz_parser import Parse


class SourcePoint(NamedTuple):
    i: int          # source start in G
    j: int          # source end in G
    text_pos: int   # global start of the phrase occurrence in T
    doc: int


@dataclass(frozen=True)
class SourceGrid:
    """One point per phrase occurrence, sorted by (source start, text position)."""

    order: np.ndarray     # phrase index of each point
    i: np.ndarray
    j: np.ndarray
    text_pos: np.ndarray
    doc: np.ndarray
    rmq: np.ndarray       # argmax sparse table over j

    def __len__(self) -> int:
        return int(self.i.shape[0])

    def point(self, k: int) -> SourcePoint:
        return SourcePoint(int(self.i[k]), int(self.j[k]), int(self.text_pos[k]), int(self.doc[k]))

    @property
    def points(self) -> list[SourcePoint]:
        return [self.point(k) for k in range(len(self))]

    def report(self, x: int, y: int) -> tuple[np.ndarray, int]:
        """Point indices with i <= x and j >= y (ascending), plus the number
        of ranges the range-maximum descent visited."""
        prefix = int(np.searchsorted(self.i, x, side="right"))
        out = np.empty(prefix, dtype=np.int64)
        count, visited = kernels.rmq_report(self.j, self.rmq, prefix, y, out)
        return np.sort(out[:count]), int(visited)


def build_source_grid(parse: Parse, order=None) -> SourceGrid:
    if order is None:
        order = np.lexsort((parse.text_start, parse.src))
    order = np.asarray(order, dtype=np.int64)
    i = parse.src[order]
    j = i + parse.lens[order] - 1
    return SourceGrid(order, i, j, parse.text_start[order],
                      parse.doc_of_phrase()[order], kernels.argmax_table(j))


def containing_phrases(grid: SourceGrid, x: int, y: int) -> list[SourcePoint]:
    """Points whose source [i..j] contains [x..y]."""
    hits, _ = grid.report(x, y)
    return [grid.point(int(k)) for k in hits]


def secondary_occurrences(grid: SourceGrid, parse: Parse, g_hits, m: int) -> list[tuple[int, int]]:
    """Text occurrences implied by reference hits, as (doc, offset) pairs."""
    out = []
    starts = parse.doc_starts
    for x in g_hits:
        hits, _ = grid.report(x, x + m - 1)
        if not hits.shape[0]:
            continue
        pos = grid.text_pos[hits] + (x - grid.i[hits])
        docs = grid.doc[hits]
        offsets = pos - starts[docs - 1] + 1
        out.extend(zip(docs.tolist(), offsets.tolist()))
    return sorted(out)
