import logging
from typing import Iterable

from models.graph import ColoredGraph, Graph
from models.partition import OrderedPartition
from models.verdict import InducedShape, Relation
from refinement.equitable import quotient_rows
from refinement.refiner import refine_graph

log = logging.getLogger('c2kit')


class Flip:
    """Flipped graph F with the C2-coloring of the input (class indices) and the complemented class pairs"""

    def __init__(self, graph: ColoredGraph, partition: OrderedPartition, flipped: frozenset[tuple[int, int]],
                 rows: list[dict[int, int]]):
        self.graph = graph
        self.partition = partition
        self.flipped = flipped
        self.rows = rows

    @property
    def coloring(self) -> tuple[int, ...]:
        return self.graph.coloring

    @property
    def t(self) -> int:
        return self.partition.t

    def size(self, i: int) -> int:
        return len(self.partition.classes[i])

    def degree(self, i: int, j: int) -> int:
        """Neighbours a vertex of class i has in class j of F"""
        return self.rows[i].get(j, 0)

    def shape(self, i: int) -> InducedShape:
        return induced_shape(self.size(i), self.degree(i, i))

    def __repr__(self):
        return f'Flip(n={self.graph.n}, classes={self.t}, flipped={len(self.flipped)})'


def induced_shape(size: int, degree: int) -> InducedShape:
    """Regular graph of the given degree inside a class of a flipped graph"""
    if degree == 0:
        return InducedShape.EMPTY
    if degree == 1:
        return InducedShape.MATCHING
    if degree == 2 and size == 5:
        return InducedShape.FIVE_CYCLE
    return InducedShape.OTHER


def complement_pairs(g: Graph, partition: OrderedPartition, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Toggles every vertex pair running between (or inside) the given class pairs.

    Runs in time proportional to the edges kept plus the pairs inside the toggled blocks.
    """
    pairs = {(min(i, j), max(i, j)) for i, j in pairs}
    class_of = partition.class_of
    edges = [(u, v) for u, v in g.edges
             if (min(class_of[u], class_of[v]), max(class_of[u], class_of[v])) not in pairs]
    for i, j in sorted(pairs):
        for v in partition.classes[i]:
            neighbours = set(g.adjacency[v])
            edges.extend((v, w) for w in partition.classes[j]
                         if w not in neighbours and w != v and (i != j or w > v))
    return Graph(g.n, edges)


def flip(g: ColoredGraph | Graph) -> Flip:
    """Complements every class pair (a class with itself included) holding more edges than non-edges"""
    if isinstance(g, Graph):
        g = ColoredGraph(g)
    partition = refine_graph(g)
    rows = quotient_rows(g, partition)
    sizes = partition.sizes

    flipped = set()
    for i, row in enumerate(rows):
        for j, k in row.items():
            if i == j and 2 * k > sizes[i] - 1 or i < j and 2 * k > sizes[j]:
                flipped.add((i, j))

    flipped_rows = []
    for i, row in enumerate(rows):
        flipped_row = {}
        for j, k in row.items():
            if (min(i, j), max(i, j)) in flipped:
                k = sizes[j] - (1 if i == j else 0) - k
            if k:
                flipped_row[j] = k
        flipped_rows.append(flipped_row)

    graph = complement_pairs(g.graph, partition, flipped)
    log.debug(f'flip: {len(flipped)} of the class pairs complemented, {g.graph.m} -> {graph.m} edges')
    return Flip(ColoredGraph(graph, partition.class_of), partition, frozenset(flipped), flipped_rows)


def pair_relation(f: Flip, p: int, q: int) -> Relation:
    """Relation of two distinct classes from the biregular graph between them in the flip"""
    k, l = f.degree(p, q), f.degree(q, p)
    if k == 0 and l == 0:
        return Relation.EMPTY
    if k == 1 and l == 1:
        return Relation.MATCHED
    if k >= 2 and l == 1:
        return Relation.INTO
    if k == 1 and l >= 2:
        return Relation.FROM
    return Relation.OTHER
