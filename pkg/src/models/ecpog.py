from typing import Iterator, Mapping, Sequence

import networkx as nx

from models.exception import DuplicateEdgeException, IncompleteEcPogException, IndexOutOfRangeException, \
    InconsistentUndirectedColorException, LoopEdgeException, MalformedInputException, \
    MixedOrientationColorException
from utils.constants import DIRECTED_KEYWORD, ECPOG_HEADER, UNDIRECTED_KEYWORD, VERTEX_KEYWORD

ABSENT = -1

# direction of a pair seen from its first vertex
OUT = 0
IN = 1
UNDIRECTED = 2


class EcPog:
    """Complete edge-colored partially oriented graph.

    ``matrix[u][v]`` is the color of the arc (u, v) or ``ABSENT``; an undirected edge stores
    its color in both directions. Instances are only built through ``validate_ecpog``.
    """

    def __init__(self, n: int, matrix: list[list[int]], directed_colors: frozenset[int]):
        self.n = n
        self.matrix = matrix
        self.directed_colors = directed_colors
        self.colors: tuple[int, ...] = tuple(sorted({c for row in matrix for c in row if c != ABSENT}))

    @property
    def color_count(self) -> int:
        return self.colors[-1] + 1 if self.colors else 0

    def color(self, u: int, v: int) -> int:
        """Color of the pair regardless of its orientation"""
        c = self.matrix[u][v]
        return c if c != ABSENT else self.matrix[v][u]

    def label(self, u: int, v: int) -> tuple[int, int]:
        """(direction, color) of the pair {u, v} as seen from u"""
        forward = self.matrix[u][v]
        backward = self.matrix[v][u]
        if forward == ABSENT:
            return IN, backward
        if backward == ABSENT:
            return OUT, forward
        return UNDIRECTED, forward

    def is_directed(self, color: int) -> bool:
        return color in self.directed_colors

    def arcs(self) -> Iterator[tuple[int, int, int]]:
        """Every pair once: (u, v, color) with u < v for undirected edges, tail first for arcs"""
        for u in range(self.n):
            row = self.matrix[u]
            for v in range(self.n):
                c = row[v]
                if c == ABSENT or u == v:
                    continue
                if self.matrix[v][u] == c and v < u:
                    continue
                yield u, v, c

    def color_subgraph(self, color: int) -> nx.Graph:
        """Underlying undirected graph of one color class"""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from((u, v) for u, v, c in self.arcs() if c == color)
        return graph

    def restrict(self, vertices: Sequence[int]) -> 'EcPog':
        """Induced sub-ecPOG, vertices renumbered in the given order"""
        matrix = [[self.matrix[u][v] for v in vertices] for u in vertices]
        induced = {c for row in matrix for c in row if c != ABSENT}
        return EcPog(len(vertices), matrix, frozenset(induced & self.directed_colors))

    def relabel(self, permutation: Sequence[int]) -> 'EcPog':
        """Moves vertex v to permutation[v]"""
        matrix = [[ABSENT] * self.n for _ in range(self.n)]
        for u in range(self.n):
            for v in range(self.n):
                matrix[permutation[u]][permutation[v]] = self.matrix[u][v]
        return EcPog(self.n, matrix, self.directed_colors)

    def to_networkx(self) -> nx.DiGraph:
        """Symmetric digraph: undirected edges become two arcs, all arcs carry 'color'"""
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.n))
        for u in range(self.n):
            for v in range(self.n):
                if self.matrix[u][v] != ABSENT:
                    graph.add_edge(u, v, color=self.matrix[u][v])
        return graph

    def serialize(self, coloring: Sequence[int] | None = None) -> str:
        lines = [f'{ECPOG_HEADER} {self.n} {self.color_count}']
        for u, v, c in self.arcs():
            keyword = DIRECTED_KEYWORD if c in self.directed_colors else UNDIRECTED_KEYWORD
            lines.append(f'{keyword} {u} {v} {c}')
        if coloring is not None and len(set(coloring)) > 1:
            lines.extend(f'{VERTEX_KEYWORD} {v} {color}' for v, color in enumerate(coloring))
        return '\n'.join(lines) + '\n'

    def __eq__(self, other):
        return isinstance(other, EcPog) and self.n == other.n and self.matrix == other.matrix

    def __hash__(self):
        return hash((self.n, tuple(map(tuple, self.matrix))))

    def __repr__(self):
        return f'EcPog(n={self.n}, colors={self.colors}, directed={sorted(self.directed_colors)})'


def validate_ecpog(n: int, arcs: Mapping[tuple[int, int], int]) -> EcPog:
    """Checks a raw arc -> color map and freezes it into an EcPog.

    Undirected edges are given by listing both (u, v) and (v, u) with one color.
    """
    if n < 0:
        raise MalformedInputException(f'vertex count must be non-negative, got {n}')
    matrix = [[ABSENT] * n for _ in range(n)]
    for (u, v), color in arcs.items():
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRangeException(f'pair ({u},{v}) leaves the vertex range [0, {n})')
        if u == v:
            raise LoopEdgeException(f'loop at vertex {u}')
        if color < 0:
            raise MalformedInputException(f'color ids must be non-negative, got {color} on ({u},{v})')
        matrix[u][v] = color

    directed = set()
    undirected = set()
    for u in range(n):
        for v in range(u + 1, n):
            forward, backward = matrix[u][v], matrix[v][u]
            if forward == ABSENT and backward == ABSENT:
                raise IncompleteEcPogException(f'pair {{{u},{v}}} carries no color')
            if forward != ABSENT and backward != ABSENT:
                if forward != backward:
                    raise InconsistentUndirectedColorException(
                        f'pair {{{u},{v}}} has color {forward} forwards and {backward} backwards')
                undirected.add(forward)
            else:
                directed.add(forward if forward != ABSENT else backward)

    mixed = directed & undirected
    if mixed:
        raise MixedOrientationColorException(f'colors {sorted(mixed)} appear on directed and undirected edges')
    return EcPog(n, matrix, frozenset(directed))


def ecpog_from_edges(n: int, undirected: Mapping[tuple[int, int], int] = None,
                     directed: Mapping[tuple[int, int], int] = None) -> EcPog:
    """Convenience front end to validate_ecpog taking undirected and directed pairs separately"""
    arcs = {}
    for (u, v), color in (undirected or {}).items():
        arcs[(u, v)] = color
        arcs[(v, u)] = color
    given = set(arcs)
    for (u, v), color in (directed or {}).items():
        if (u, v) in given:
            raise DuplicateEdgeException(f'pair {{{u},{v}}} is given both undirected and directed')
        if (v, u) in arcs and arcs[(v, u)] != color:
            raise InconsistentUndirectedColorException(f'pair {{{u},{v}}} is listed twice with different colors')
        arcs[(u, v)] = color
    return validate_ecpog(n, arcs)
