import logging
from typing import Callable, Hashable, Sequence

from invariants.invariant import ecpog_invariant_of, graph_invariant_of
from models.ecpog import EcPog
from models.graph import ColoredGraph, Graph
from models.partition import OrderedPartition
from oracles.exception import TooLargeException
from refinement.refiner import refine_ecpog, refine_graph
from utils.constants import MAX_SEARCH_ORDER

log = logging.getLogger('c2kit')

# coloring -> (stable ordered partition, its invariant)
Refine = Callable[[list[int]], tuple[OrderedPartition, Hashable]]


class IsomorphismSearch:
    """Individualization-refinement backtracking between two objects of the same kind.

    Both sides are refined with the same canonical class order, so class i of one side can
    only map onto class i of the other. The first non-singleton class is split by fixing its
    first vertex on the left and every vertex of the matching class on the right in turn.
    """

    def __init__(self, refine_left: Refine, refine_right: Refine, is_isomorphism: Callable[[list[int]], bool]):
        self.refine_left = refine_left
        self.refine_right = refine_right
        self.is_isomorphism = is_isomorphism
        self.nodes = 0

    def find(self, left: Sequence[int], right: Sequence[int]) -> list[int] | None:
        self.nodes += 1
        partition, invariant = self.refine_left(list(left))
        other, other_invariant = self.refine_right(list(right))
        if invariant != other_invariant:
            return None
        if partition.is_discrete:
            mapping = [0] * len(partition.class_of)
            for cls, image in zip(partition.classes, other.classes):
                mapping[cls[0]] = image[0]
            return mapping if self.is_isomorphism(mapping) else None

        index = next(i for i, cls in enumerate(partition.classes) if len(cls) > 1)
        fixed = partition.classes[index][0]
        for candidate in other.classes[index]:
            left_coloring = list(partition.class_of)
            left_coloring[fixed] = partition.t
            right_coloring = list(other.class_of)
            right_coloring[candidate] = other.t
            mapping = self.find(left_coloring, right_coloring)
            if mapping is not None:
                return mapping
        return None


def _guard(n: int):
    if n > MAX_SEARCH_ORDER:
        raise TooLargeException(f'isomorphism search stops at {MAX_SEARCH_ORDER} vertices, got {n}')


def _graph_refine(g: ColoredGraph) -> Refine:
    def refine(coloring: list[int]) -> tuple[OrderedPartition, Hashable]:
        colored = ColoredGraph(g.graph, coloring)
        partition = refine_graph(colored)
        return partition, graph_invariant_of(colored, partition)
    return refine


def find_isomorphism(g: ColoredGraph | Graph, h: ColoredGraph | Graph) -> list[int] | None:
    """A color-preserving isomorphism g -> h as a vertex map, or None"""
    g = g if isinstance(g, ColoredGraph) else ColoredGraph(g)
    h = h if isinstance(h, ColoredGraph) else ColoredGraph(h)
    _guard(max(g.n, h.n))
    if g.n != h.n or g.graph.m != h.graph.m:
        return None

    def is_isomorphism(mapping: list[int]) -> bool:
        return all(h.graph.has_edge(mapping[u], mapping[v]) for u, v in g.edges) \
            and all(g.coloring[v] == h.coloring[mapping[v]] for v in range(g.n))

    search = IsomorphismSearch(_graph_refine(g), _graph_refine(h), is_isomorphism)
    mapping = search.find(g.coloring, h.coloring)
    log.debug(f'isomorphism search: {search.nodes} nodes, {"found" if mapping else "none"}')
    return mapping


def are_isomorphic(g: ColoredGraph | Graph, h: ColoredGraph | Graph) -> bool:
    return find_isomorphism(g, h) is not None


def _ecpog_refine(p: EcPog) -> Refine:
    def refine(coloring: list[int]) -> tuple[OrderedPartition, Hashable]:
        partition = refine_ecpog(p, coloring)
        return partition, ecpog_invariant_of(p, partition)
    return refine


def are_isomorphic_ecpog(p: EcPog, q: EcPog, p_coloring: Sequence[int] | None = None,
                         q_coloring: Sequence[int] | None = None) -> bool:
    """Isomorphism of vertex-colored ecPOGs preserving edge colors, directions and vertex colors"""
    _guard(max(p.n, q.n))
    if p.n != q.n:
        return False
    p_coloring = list(p_coloring) if p_coloring is not None else [0] * p.n
    q_coloring = list(q_coloring) if q_coloring is not None else [0] * q.n

    def is_isomorphism(mapping: list[int]) -> bool:
        return all(p.matrix[u][v] == q.matrix[mapping[u]][mapping[v]] for u in range(p.n) for v in range(p.n)) \
            and all(p_coloring[v] == q_coloring[mapping[v]] for v in range(p.n))

    return IsomorphismSearch(_ecpog_refine(p), _ecpog_refine(q), is_isomorphism).find(p_coloring, q_coloring) \
        is not None


def automorphism_orbits(g: ColoredGraph | Graph) -> OrderedPartition:
    """Orbits of the color-preserving automorphism group, ordered by smallest vertex"""
    g = g if isinstance(g, ColoredGraph) else ColoredGraph(g)
    _guard(g.n)
    refine = _graph_refine(g)
    partition, _ = refine(list(g.coloring))

    def is_automorphism(mapping: list[int]) -> bool:
        return all(g.graph.has_edge(mapping[u], mapping[v]) for u, v in g.edges)

    search = IsomorphismSearch(refine, refine, is_automorphism)
    representative = list(range(g.n))
    for cls in partition.classes:
        orbit_heads: list[int] = []
        for v in cls:
            for head in orbit_heads:
                left = list(partition.class_of)
                left[head] = partition.t
                right = list(partition.class_of)
                right[v] = partition.t
                if search.find(left, right) is not None:
                    representative[v] = head
                    break
            else:
                orbit_heads.append(v)
    log.debug(f'orbits: {len(set(representative))} orbits, {search.nodes} search nodes')
    return OrderedPartition.from_labels(representative)
