from typing import Iterable, Sequence

import networkx as nx

from models.exception import DuplicateEdgeException, IndexOutOfRangeException, LoopEdgeException, \
    MalformedInputException
from utils.constants import EDGE_KEYWORD, GRAPH_HEADER, VERTEX_KEYWORD
from utils.utils import is_contiguous


class Graph:
    """Finite simple undirected graph on the vertices 0..n-1"""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise MalformedInputException(f'vertex count must be non-negative, got {n}')
        self.n = n
        normalized = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise IndexOutOfRangeException(f'edge {{{u},{v}}} leaves the vertex range [0, {n})')
            if u == v:
                raise LoopEdgeException(f'loop at vertex {u}')
            edge = (u, v) if u < v else (v, u)
            if edge in normalized:
                raise DuplicateEdgeException(f'edge {{{u},{v}}} is listed twice')
            normalized.add(edge)
        self.edges: frozenset[tuple[int, int]] = frozenset(normalized)
        self._adjacency: list[list[int]] | None = None

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def adjacency(self) -> list[list[int]]:
        """Sorted neighbour lists, built on first use"""
        if self._adjacency is None:
            adjacency = [[] for _ in range(self.n)]
            for u, v in self.edges:
                adjacency[u].append(v)
                adjacency[v].append(u)
            for neighbours in adjacency:
                neighbours.sort()
            self._adjacency = adjacency
        return self._adjacency

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def relabel(self, permutation: Sequence[int]) -> 'Graph':
        """Moves vertex v to permutation[v]"""
        return Graph(self.n, ((permutation[u], permutation[v]) for u, v in self.edges))

    def complement(self) -> 'Graph':
        return Graph(self.n, ((u, v) for u in range(self.n) for v in range(u + 1, self.n)
                              if (u, v) not in self.edges))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def serialize(self) -> str:
        lines = [f'{GRAPH_HEADER} {self.n} {self.m}']
        lines.extend(f'{EDGE_KEYWORD} {u} {v}' for u, v in self.sorted_edges())
        return '\n'.join(lines) + '\n'

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f'Graph(n={self.n}, m={self.m})'


class ColoredGraph:
    """Graph together with a total vertex coloring by dense color ids"""

    def __init__(self, graph: Graph, coloring: Sequence[int] | None = None):
        self.graph = graph
        if coloring is None:
            coloring = [0] * graph.n
        coloring = tuple(coloring)
        if len(coloring) != graph.n:
            raise MalformedInputException(f'coloring covers {len(coloring)} vertices, graph has {graph.n}')
        if any(color < 0 for color in coloring) or not is_contiguous(coloring):
            raise MalformedInputException(f'color ids must form a contiguous range starting at 0: {sorted(set(coloring))}')
        self.coloring: tuple[int, ...] = coloring

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return self.graph.edges

    @property
    def adjacency(self) -> list[list[int]]:
        return self.graph.adjacency

    @property
    def color_count(self) -> int:
        return max(self.coloring) + 1 if self.coloring else 0

    def is_monochrome(self) -> bool:
        return self.color_count <= 1

    def recolor(self, coloring: Sequence[int]) -> 'ColoredGraph':
        return ColoredGraph(self.graph, coloring)

    def relabel(self, permutation: Sequence[int]) -> 'ColoredGraph':
        coloring = [0] * self.n
        for v, color in enumerate(self.coloring):
            coloring[permutation[v]] = color
        return ColoredGraph(self.graph.relabel(permutation), coloring)

    def to_networkx(self) -> nx.Graph:
        graph = self.graph.to_networkx()
        nx.set_node_attributes(graph, dict(enumerate(self.coloring)), 'color')
        return graph

    def serialize(self) -> str:
        text = self.graph.serialize()
        if self.is_monochrome():
            return text
        return text + ''.join(f'{VERTEX_KEYWORD} {v} {color}\n' for v, color in enumerate(self.coloring))

    def __eq__(self, other):
        return isinstance(other, ColoredGraph) and self.graph == other.graph and self.coloring == other.coloring

    def __hash__(self):
        return hash((self.graph, self.coloring))

    def __repr__(self):
        return f'ColoredGraph(n={self.n}, m={self.graph.m}, colors={self.color_count})'
