import random
from itertools import combinations

import pytest

from iasi_powers import Graph

ACCEPTANCE_LINES: list[str] = []


def connected_graphs(max_n: int):
    """Every connected labelled graph on 1..max_n vertices (edge subsets of K_n)."""
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            g = Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
            if g.is_connected():
                yield g


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_tree(rng: random.Random, n: int) -> Graph:
    return Graph.from_edges(n, [(v, rng.randrange(v)) for v in range(1, n)])


@pytest.fixture
def rng():
    return random.Random(20240517)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
