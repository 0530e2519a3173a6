import pytest

from builders import path
from models.graph import ColoredGraph, Graph


@pytest.fixture
def petersen() -> Graph:
    outer = [(v, (v + 1) % 5) for v in range(5)]
    spokes = [(v, v + 5) for v in range(5)]
    inner = [(5 + v, 5 + (v + 2) % 5) for v in range(5)]
    return Graph(10, outer + spokes + inner)


@pytest.fixture
def colored_path() -> ColoredGraph:
    """Path 0-1-2-3 with its two ends told apart by color"""
    return ColoredGraph(path(4), [1, 0, 0, 0])
