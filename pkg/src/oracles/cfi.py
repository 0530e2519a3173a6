import logging
from itertools import combinations
from typing import Iterable, NamedTuple

import networkx as nx

from models.graph import ColoredGraph, Graph
from oracles.exception import DegreeTooSmallException, DisconnectedBaseException

log = logging.getLogger('c2kit')

Edge = tuple[int, int]


class CfiLayout:
    """Vertex numbering of the gadgets over a base graph.

    Gadget x holds one middle vertex per even subset of the edges at x, joined to the ``a``
    vertex of every edge in the subset and the ``b`` vertex of every other edge, followed by
    the outer pairs (a, b), one per incident edge in sorted order. Middle vertices of a gadget
    share a color and every outer pair has a color of its own.
    """

    def __init__(self, base: Graph):
        graph = base.to_networkx()
        if base.n == 0 or not nx.is_connected(graph):
            raise DisconnectedBaseException('CFI base graphs must be connected')
        thin = [v for v in range(base.n) if base.degree(v) < 2]
        if thin:
            raise DegreeTooSmallException(f'CFI base vertices need degree at least 2, got {thin}')
        self.base = base
        self.base_edges: list[Edge] = base.sorted_edges()
        self.outer: dict[tuple[int, Edge], tuple[int, int]] = {}
        self.middle: dict[int, list[tuple[int, frozenset[Edge]]]] = {}
        self.coloring: list[int] = []
        self.inner_edges: list[Edge] = []

        for x in range(base.n):
            incident = [e for e in self.base_edges if x in e]
            first_middle = len(self.coloring)
            middle_color = self._next_color()
            subsets = [frozenset(s) for size in range(0, len(incident) + 1, 2) for s in combinations(incident, size)]
            for subset in subsets:
                self.middle.setdefault(x, []).append((len(self.coloring), subset))
                self.coloring.append(middle_color)
            for e in incident:
                color = self._next_color()
                self.outer[(x, e)] = (len(self.coloring), len(self.coloring) + 1)
                self.coloring.extend((color, color))
            for m, subset in self.middle[x]:
                for e in incident:
                    a, b = self.outer[(x, e)]
                    self.inner_edges.append((m, a if e in subset else b))
            log.debug(f'gadget {x}: {len(subsets)} middle vertices from {first_middle}, {len(incident)} outer pairs')

    def _next_color(self) -> int:
        return max(self.coloring, default=-1) + 1

    @property
    def n(self) -> int:
        return len(self.coloring)

    def connection(self, e: Edge, twisted: bool) -> list[Edge]:
        x, y = e
        a, b = self.outer[(x, e)]
        a_other, b_other = self.outer[(y, e)]
        if twisted:
            return [(a, b_other), (b, a_other)]
        return [(a, a_other), (b, b_other)]

    def edges(self, twisted_edges: Iterable[Edge] = ()) -> list[Edge]:
        twisted = {tuple(sorted(e)) for e in twisted_edges}
        edges = list(self.inner_edges)
        for e in self.base_edges:
            edges.extend(self.connection(e, e in twisted))
        return edges


class CfiPair(NamedTuple):
    """Two CFI graphs on one vertex set that differ only in the twist of one base edge"""
    base: Graph
    g: ColoredGraph
    g_prime: ColoredGraph
    a: int
    b: int
    a_prime: int
    b_prime: int
    twists: dict[Edge, bool]


class Designated(NamedTuple):
    """A constructed graph with the vertices hung off parallel and twisted connections"""
    graph: ColoredGraph
    parallel: tuple[int, ...]
    twisted: tuple[int, ...]


def cfi_graph(base: Graph, twisted_edges: Iterable[Edge] = ()) -> ColoredGraph:
    """CFI graph over base with the given base edges twisted; the isomorphism type depends on the twist parity only"""
    layout = CfiLayout(base)
    return ColoredGraph(Graph(layout.n, layout.edges(twisted_edges)), layout.coloring)


def cfi_pair(base: Graph) -> CfiPair:
    """Untwisted CFI graph and the one with the first base edge twisted"""
    layout = CfiLayout(base)
    e = layout.base_edges[0]
    g = ColoredGraph(Graph(layout.n, layout.edges()), layout.coloring)
    g_prime = ColoredGraph(Graph(layout.n, layout.edges([e])), layout.coloring)
    a, b = layout.outer[(e[0], e)]
    a_prime, b_prime = layout.outer[(e[1], e)]
    twists = {edge: edge == e for edge in layout.base_edges}
    log.debug(f'cfi pair over {base!r}: {layout.n} vertices, twisted edge {e}')
    return CfiPair(base, g, g_prime, a, b, a_prime, b_prime, twists)


class _Builder:

    def __init__(self, g: ColoredGraph):
        self.edges = set(g.edges)
        self.coloring = list(g.coloring)

    def vertex(self, color: int) -> int:
        self.coloring.append(color)
        return len(self.coloring) - 1

    def subdivide(self, u: int, v: int, color: int) -> int:
        self.edges.discard((min(u, v), max(u, v)))
        middle = self.vertex(color)
        self.edges.update({(u, middle), (v, middle)})
        return middle

    def build(self) -> ColoredGraph:
        return ColoredGraph(Graph(len(self.coloring), self.edges), self.coloring)


def union_and_subdivide_h(base: Graph) -> Designated:
    """Union of a CFI pair with the four differing edges subdivided.

    The midpoints of the two parallel edges are joined to a new vertex v_p and those of the
    two twisted edges to v_t. The two lie in one C2 class but in different orbits.
    """
    pair = cfi_pair(base)
    builder = _Builder(pair.g)
    builder.edges |= pair.g_prime.edges
    midpoint_color = max(builder.coloring) + 1
    apex_color = midpoint_color + 1
    parallel = [builder.subdivide(pair.a, pair.a_prime, midpoint_color),
                builder.subdivide(pair.b, pair.b_prime, midpoint_color)]
    twisted = [builder.subdivide(pair.a, pair.b_prime, midpoint_color),
               builder.subdivide(pair.b, pair.a_prime, midpoint_color)]
    v_p = builder.vertex(apex_color)
    v_t = builder.vertex(apex_color)
    builder.edges.update((m, v_p) for m in parallel)
    builder.edges.update((m, v_t) for m in twisted)
    return Designated(builder.build(), (v_p,), (v_t,))


def double_subdivide_h(base: Graph) -> Designated:
    """Ladder variant: the parallel edges become paths a1 a2 a3 and b1 b2 b3 with all rungs a_i b_(i+1), b_i a_(i+1).

    Every connection is subdivided; v_(i,p) joins the midpoints of the parallel connections of
    step i and v_(i,t) those of the twisted ones. ``parallel`` and ``twisted`` list v_(1,.) and
    v_(2,.) in this order.
    """
    pair = cfi_pair(base)
    builder = _Builder(pair.g)
    step_color = max(builder.coloring) + 1
    builder.edges -= {tuple(sorted((pair.a, pair.a_prime))), tuple(sorted((pair.b, pair.b_prime)))}
    a_path = (pair.a, builder.vertex(step_color), pair.a_prime)
    b_path = (pair.b, builder.vertex(step_color), pair.b_prime)

    parallel, twisted = [], []
    for i in range(2):
        midpoint_color = step_color + 1 + 2 * i
        apex_color = midpoint_color + 1
        connections = [(a_path[i], a_path[i + 1]), (b_path[i], b_path[i + 1]),
                       (a_path[i], b_path[i + 1]), (b_path[i], a_path[i + 1])]
        middles = [builder.vertex(midpoint_color) for _ in connections]
        for (u, v), middle in zip(connections, middles):
            builder.edges.update({(u, middle), (v, middle)})
        v_p = builder.vertex(apex_color)
        v_t = builder.vertex(apex_color)
        builder.edges.update({(middles[0], v_p), (middles[1], v_p), (middles[2], v_t), (middles[3], v_t)})
        parallel.append(v_p)
        twisted.append(v_t)
    return Designated(builder.build(), tuple(parallel), tuple(twisted))
