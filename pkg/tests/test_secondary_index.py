import numpy as np
import pytest

from rlzindex import build_reference_index, parse_collection
from rlzindex import oracle
from rlzindex.secondary_index import (SourcePoint, build_source_grid, containing_phrases,
                                      secondary_occurrences)

from conftest import random_corpus


@pytest.fixture(scope="module")
def grid_and_parse():
    ix = build_reference_index("acgtgca")
    parse = parse_collection(ix, ["cgtgacgt"])
    return build_source_grid(parse), parse


def test_build_source_grid(grid_and_parse):
    grid, _ = grid_and_parse
    assert grid.points == [SourcePoint(1, 4, 5, 1), SourcePoint(2, 5, 1, 1)]


def test_empty_and_tied_grids():
    ix = build_reference_index("acgtgca")
    assert len(build_source_grid(parse_collection(ix, []))) == 0
    tied = build_source_grid(parse_collection(ix, ["acgt", "acgt"]))
    assert [(p.i, p.j, p.text_pos) for p in tied.points] == [(1, 4, 1), (1, 4, 5)]


def test_containing_phrases(grid_and_parse):
    grid, _ = grid_and_parse
    assert sorted(containing_phrases(grid, 2, 3)) == [SourcePoint(1, 4, 5, 1), SourcePoint(2, 5, 1, 1)]
    assert containing_phrases(grid, 1, 7) == []
    assert containing_phrases(grid, 5, 5) == [SourcePoint(2, 5, 1, 1)]


def test_secondary_occurrences_examples(grid_and_parse):
    grid, parse = grid_and_parse
    assert secondary_occurrences(grid, parse, [2], 2) == [(1, 1), (1, 6)]
    assert secondary_occurrences(grid, parse, [], 2) == []
    assert secondary_occurrences(grid, parse, [1], 7) == []


def test_equivalence_and_output_bound():
    rng = np.random.default_rng(21)
    for _ in range(25):
        g, docs = random_corpus(rng, n=int(rng.integers(20, 200)), docs=3, rate=0.05)
        ix = build_reference_index(g)
        parse = parse_collection(ix, docs)
        grid = build_source_grid(parse)
        starts = parse.doc_phrase_start.tolist()
        parses = [[tuple(p) for p in parse.phrases[starts[k]:starts[k + 1]]] for k in range(len(docs))]
        for _ in range(15):
            d = docs[int(rng.integers(len(docs)))]
            s = int(rng.integers(len(d)))
            p = d[s:s + int(rng.integers(1, 9))]
            m = len(p)
            g_hits = oracle.occurrences(g, p)
            got = secondary_occurrences(grid, parse, g_hits, m)
            expected = sorted((h.doc, h.offset) for h in oracle.naive_search(g, docs, p, parses)
                              if h.doc and not h.spans_boundary)
            assert got == expected
            assert len(set(got)) == len(got)
            for doc, off in got:
                assert docs[doc - 1][off - 1:off - 1 + m] == p
            for x in g_hits:
                hits, visited = grid.report(x, x + m - 1)
                # range-maximum splitting: one visit per hit plus one per dead end
                assert visited <= 2 * len(hits) + 1
