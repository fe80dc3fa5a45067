from functools import lru_cache

import pytest

from colourflip.colouring import ColourScheme
from colourflip.flipgraph import build_flip_graph, graph_components

TWO = ColourScheme.cyclic(2)

_ACCEPTANCE_LINES = []


@lru_cache(maxsize=None)
def graph2(n):
    return build_flip_graph(n, TWO)


@lru_cache(maxsize=None)
def components2(n):
    return tuple(graph_components(graph2(n)))


@pytest.fixture
def two():
    return TWO


@pytest.fixture
def acceptance_log():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
