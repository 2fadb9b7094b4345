import itertools
import random

import pytest
from hypothesis import strategies as st

from edgeideal.graph import Graph


def labeled_graph(n, bits):
    pairs = list(itertools.combinations(range(n), 2))
    return Graph.from_edges(n, [p for t, p in enumerate(pairs) if bits >> t & 1])


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    bits = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1)) if n > 1 else 0
    return labeled_graph(n, bits)


def seeded_graphs(count, max_n, seed, min_n=0):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(min_n, max_n)
        p = rng.random()
        out.append(Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p]))
    return out


@pytest.fixture
def P3():
    # x1-x2-x3 as 0-1-2
    return Graph.from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def P4():
    # 1-2-3-4 as 0-1-2-3
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def K2():
    return Graph.from_edges(2, [(0, 1)])


@pytest.fixture
def C4():
    # 1-2-3-4-1 as 0-1-2-3-0
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def C8():
    return Graph.from_edges(8, [(i, (i + 1) % 8) for i in range(8)])


# one line per acceptance criterion, printed after the run
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
