import logging
from collections import Counter
from itertools import product

from models.graph import ColoredGraph, Graph
from oracles.exception import TooLargeException
from utils.constants import MAX_KWL_ORDER

log = logging.getLogger('c2kit')


class TupleColoring:
    """k-tuple colors of one graph, colors being ids into a palette shared with the other graph"""

    def __init__(self, g: ColoredGraph, k: int):
        self.g = g
        self.k = k
        self.tuples = list(product(range(g.n), repeat=k))
        self.index = {t: i for i, t in enumerate(self.tuples)}
        self.colors: list = [self.atomic_type(t) for t in self.tuples]

    def atomic_type(self, t: tuple[int, ...]) -> tuple:
        g = self.g
        return (tuple(g.coloring[v] for v in t),
                tuple((t[i] == t[j], g.graph.has_edge(t[i], t[j])) for i in range(self.k) for j in range(i + 1, self.k)))

    def signatures(self) -> list[tuple]:
        """Old color plus the multiset over w of (how w relates to the entries, colors of t with w put in each place)"""
        g = self.g
        result = []
        for position, t in enumerate(self.tuples):
            neighbours = []
            for w in range(g.n):
                relation = tuple((w == v, g.graph.has_edge(v, w)) for v in t)
                swapped = tuple(self.colors[self.index[t[:i] + (w,) + t[i + 1:]]] for i in range(self.k))
                neighbours.append((relation, swapped))
            result.append((self.colors[position], tuple(sorted(neighbours))))
        return result

    def histogram(self) -> Counter:
        return Counter(self.colors)


def kwl_equivalent(g: ColoredGraph | Graph, h: ColoredGraph | Graph, k: int) -> bool:
    """Whether k-dimensional Weisfeiler-Leman fails to distinguish g and h (C^(k+1)-equivalence)"""
    if k not in MAX_KWL_ORDER:
        raise TooLargeException(f'k-WL is available for k in {sorted(MAX_KWL_ORDER)}, got {k}')
    g = g if isinstance(g, ColoredGraph) else ColoredGraph(g)
    h = h if isinstance(h, ColoredGraph) else ColoredGraph(h)
    limit = MAX_KWL_ORDER[k]
    if max(g.n, h.n) > limit:
        raise TooLargeException(f'{k}-WL stops at {limit} vertices, got {max(g.n, h.n)}')
    if g.n != h.n:
        return False

    left, right = TupleColoring(g, k), TupleColoring(h, k)
    classes = -1
    rounds = 0
    while True:
        palette = {color: i for i, color in enumerate(sorted(set(left.colors) | set(right.colors)))}
        left.colors = [palette[c] for c in left.colors]
        right.colors = [palette[c] for c in right.colors]
        if left.histogram() != right.histogram():
            log.debug(f'{k}-WL distinguishes after {rounds} rounds')
            return False
        if len(palette) == classes:
            log.debug(f'{k}-WL stable after {rounds} rounds with {classes} colors')
            return True
        classes = len(palette)
        left.colors, right.colors = left.signatures(), right.signatures()
        rounds += 1
