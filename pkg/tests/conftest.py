import numpy as np
import pytest

from rlzindex import RLZIndex

RUNNING_G = "acgtgca"
RUNNING_T = "cgtgacgt"
DNA = b"ACGT"


@pytest.fixture(scope="session")
def running():
    return RLZIndex.build(RUNNING_G, [RUNNING_T])


def random_dna(rng, n: int) -> bytes:
    return rng.choice(list(DNA), n).astype(np.uint8).tobytes()


def mutate(rng, g: bytes, rate: float, alphabet: bytes = DNA) -> tuple[bytes, int]:
    """Copy of g with round(rate * len(g)) substitutions to a different symbol."""
    doc = bytearray(g)
    s = int(round(rate * len(g)))
    for p in rng.choice(len(g), s, replace=False):
        doc[p] = int(rng.choice([c for c in alphabet if c != doc[p]]))
    return bytes(doc), s


def random_corpus(rng, n=200, docs=4, rate=0.03, alphabet=DNA):
    g = rng.choice(list(alphabet), n).astype(np.uint8).tobytes()
    out = [mutate(rng, g, rate, alphabet)[0] for _ in range(docs)]
    return g, out


_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
