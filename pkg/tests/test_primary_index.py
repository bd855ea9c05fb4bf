import numpy as np
import pytest

from rlzindex import EMPTY, RLZIndex, SuffixInterval as Iv
from rlzindex import oracle
from rlzindex.primary_index import (exact_phrase_rank, grid_report, pattern_suffix_intervals,
                                    phrase_interval, primary_occurrences, reversed_phrase_interval)

from conftest import random_corpus


@pytest.fixture(scope="module")
def three():
    # cgtg+acgt+cgtg -> R = (2, 1, 2, 0)
    return RLZIndex.build("acgtgca", ["cgtgacgtcgtg"])


def test_build_primary_running_example(running):
    pi = running.primary
    assert pi.rseq.syms.tolist() == [2, 1, 0]
    assert pi.rdict.keys.tolist() == [46, 53]
    assert pi.grid.points == [(1, 1, 1)]
    assert running.parse.text_start[1] == 5


def test_no_boundaries():
    assert len(RLZIndex.build("acgtgca", ["acgt"]).primary.grid) == 0
    assert len(RLZIndex.build("acgtgca", ["acgt", "acgt"]).primary.grid) == 0


def test_phrase_interval(running):
    ix, d = running.ref, running.dict
    assert phrase_interval(ix, d, Iv(2, 2), 2) == Iv(1, 1)
    assert phrase_interval(ix, d, Iv(7, 7), 1) == EMPTY
    assert phrase_interval(ix, d, Iv(4, 4), 2) == Iv(2, 2)


def test_exact_phrase_rank(running):
    ix, d = running.ref, running.dict
    assert exact_phrase_rank(ix, d, ix.interval_of("acgt"), 4) == 1
    assert exact_phrase_rank(ix, d, ix.interval_of("ac"), 2) is None
    assert exact_phrase_rank(ix, d, ix.interval_of("g"), 1) is None


def test_r_interval_and_backward_step(running, three):
    r = running.primary.rseq
    assert r.r_interval(Iv(1, 1)) == Iv(1, 1)
    assert r.r_interval(Iv(2, 2)) == EMPTY
    assert r.r_interval(EMPTY) == EMPTY
    assert r.backward_step(Iv(1, 1), 2) == EMPTY
    assert r.backward_step(EMPTY, 1) == EMPTY
    r3 = three.primary.rseq
    assert r3.syms.tolist() == [2, 1, 2, 0]
    w = r3.r_interval(Iv(2, 2))
    assert w == Iv(2, 2)
    assert r3.backward_step(w, 1) == Iv(1, 1)


def test_pattern_suffix_intervals(running):
    pi = running.primary
    ms = running.ref.matching_statistics("gac")
    out = pattern_suffix_intervals(running.ref, pi.dict, pi.rseq, "gac", ms)
    assert out[3] == EMPTY and out[2] == Iv(1, 1)
    ms = running.ref.matching_statistics("xyz")
    assert all(iv == EMPTY for iv in pattern_suffix_intervals(running.ref, pi.dict, pi.rseq, "xyz", ms)[2:])
    t = "cgtgacgt"
    out = pattern_suffix_intervals(running.ref, pi.dict, pi.rseq, t, running.ref.matching_statistics(t))
    assert out[5] == Iv(1, 1)


def test_reversed_phrase_interval(running):
    ix, rd = running.ref, running.primary.rdict
    assert reversed_phrase_interval(ix, rd, Iv(5, 6), 1) == Iv(1, 1)
    assert reversed_phrase_interval(ix, rd, Iv(1, 2), 1) == EMPTY
    assert reversed_phrase_interval(ix, rd, EMPTY, 1) == EMPTY


def test_grid_report(running):
    grid = running.primary.grid
    assert grid_report(grid, Iv(1, 1), Iv(1, 1)) == [1]
    assert grid_report(grid, EMPTY, Iv(1, 1)) == []
    assert grid_report(grid, Iv(1, 1), Iv(2, 2)) == []


def test_primary_occurrences_examples(running):
    assert primary_occurrences(running.primary, b"gac") == [(1, 4)]
    assert primary_occurrences(running.primary, b"cg") == []
    assert primary_occurrences(running.primary, b"a") == []


def _phrase_texts(index):
    g = index.ref.text.tobytes()
    return [g[s - 1:s - 1 + k] for s, k in zip(index.parse.src.tolist(), index.parse.lens.tolist())]


def test_random_corpora_primary_equals_boundary_spanning():
    rng = np.random.default_rng(31)
    for trial in range(30):
        g, docs = random_corpus(rng, n=int(rng.integers(10, 150)), docs=int(rng.integers(1, 5)),
                                rate=float(rng.uniform(0.01, 0.2)))
        index = RLZIndex.build(g, docs)
        starts = index.parse.doc_phrase_start.tolist()
        parses = [[tuple(p) for p in index.parse.phrases[starts[k]:starts[k + 1]]] for k in range(len(docs))]
        for _ in range(20):
            d = docs[int(rng.integers(len(docs)))]
            s = int(rng.integers(len(d)))
            p = d[s:s + int(rng.integers(1, 16))]
            got = primary_occurrences(index.primary, p)
            expected = sorted((h.doc, h.offset) for h in oracle.naive_search(g, docs, p, parses)
                              if h.doc and h.spans_boundary)
            assert got == expected
            assert len(set(got)) == len(got)


def test_greedy_realization_property():
    """Phrases after the first boundary inside an occurrence spell the greedy
    parse of the pattern's remainder; the last chunk prefixes the next phrase."""
    rng = np.random.default_rng(41)
    for _ in range(20):
        g, docs = random_corpus(rng, n=120, docs=3, rate=0.08)
        index = RLZIndex.build(g, docs)
        texts = _phrase_texts(index)
        ts = index.parse.text_start.tolist()
        doc_starts = index.parse.doc_starts.tolist()
        for k, d in enumerate(docs, 1):
            for _ in range(10):
                s = int(rng.integers(len(d)))
                p = d[s:s + int(rng.integers(2, 20))]
                gpos = doc_starts[k - 1] + s
                inner = [b for b, t in enumerate(ts) if gpos < t < gpos + len(p)]
                if not inner:
                    continue
                b = inner[0]
                i = ts[b] - gpos + 1
                rest = p[i - 1:]
                ell = oracle.naive_matching_statistics(g, rest)
                j = 1
                while ell[j] <= len(rest):
                    assert texts[b] == rest[j - 1:ell[j] - 1]
                    b += 1
                    j = ell[j]
                assert texts[b].startswith(rest[j - 1:])


def test_x_order_consistency():
    """Every R-interval produced by the query side, expanded to points, holds
    exactly the boundary suffixes with the stated phrase prefix."""
    rng = np.random.default_rng(51)
    for _ in range(15):
        g, docs = random_corpus(rng, n=80, docs=3, rate=0.1)
        index = RLZIndex.build(g, docs)
        rseq = index.primary.rseq
        syms = rseq.syms.tolist()
        suffixes = []
        for p in rseq.x_pos.tolist():
            end = syms.index(0, p)
            suffixes.append(tuple(syms[p:end]))
        d = index.dict.d
        for a in range(1, d + 1):
            for b in range(a, min(d, a + 3) + 1):
                iv = rseq.r_interval(Iv(a, b))
                got = set(range(iv.lo, iv.hi + 1))
                assert got == {x + 1 for x, s in enumerate(suffixes) if a <= s[0] <= b}
                for f in range(1, d + 1):
                    step = rseq.backward_step(iv, f)
                    got = set(range(step.lo, step.hi + 1))
                    assert got == {x + 1 for x, s in enumerate(suffixes)
                                   if len(s) >= 2 and s[0] == f and a <= s[1] <= b}


def test_key_interval_soundness():
    rng = np.random.default_rng(61)
    for _ in range(15):
        g, docs = random_corpus(rng, n=100, docs=3, rate=0.1)
        index = RLZIndex.build(g, docs)
        distinct = sorted(set(_phrase_texts(index)))
        rdistinct = sorted({t[::-1] for t in distinct})
        for _ in range(30):
            s = int(rng.integers(len(g)))
            x = g[s:s + int(rng.integers(1, 6))]
            iv = phrase_interval(index.ref, index.dict, index.ref.interval_of(x), len(x))
            got = distinct[iv.lo - 1:iv.hi] if not iv.empty else []
            assert got == [t for t in distinct if t.startswith(x)]
            rx = x[::-1]
            riv = reversed_phrase_interval(index.ref, index.primary.rdict,
                                           index.ref.interval_of(rx, reversed=True), len(rx))
            got = rdistinct[riv.lo - 1:riv.hi] if not riv.empty else []
            assert got == [t for t in rdistinct if t.startswith(rx)]
