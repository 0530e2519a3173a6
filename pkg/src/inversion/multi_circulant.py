import logging
from typing import NamedTuple, Sequence

from inversion.circulant import DistanceSet, passes_for, residue_pairs
from inversion.exception import InfeasibleInvariantException, NonCanonicalInvariantException
from invariants.invariant import invariant_graph
from models.graph import ColoredGraph, Graph
from models.invariant import C2Invariant
from utils.utils import cycles_of

log = logging.getLogger('c2kit')


class Representative(NamedTuple):
    """A graph realizing an invariant and the automorphism rotating every class by one"""
    graph: ColoredGraph
    witness: tuple[int, ...]

    def witness_verified(self, classes: Sequence[Sequence[int]]) -> bool:
        """The witness maps edges to edges and its cycles are exactly the given classes"""
        graph = self.graph.graph
        if any(not graph.has_edge(self.witness[u], self.witness[v]) for u, v in graph.edges):
            return False
        return {frozenset(cycle) for cycle in cycles_of(self.witness)} == {frozenset(cls) for cls in classes}


def class_offsets(sizes: tuple[int, ...]) -> list[int]:
    offsets = [0]
    for size in sizes:
        offsets.append(offsets[-1] + size)
    return offsets


def multi_circulant_representative(inv: C2Invariant, verify: bool = True) -> Representative:
    """Builds the multi-circulant graph of an invariant.

    Class i occupies a block of consecutive vertices in canonical order, is filled with a
    greedy circulant and joined to every later class by doubly-circulant passes.
    With ``verify`` the invariant of the result is recomputed and must match.
    """
    problems = inv.violations()
    if problems:
        raise InfeasibleInvariantException('; '.join(problems))

    offsets = class_offsets(inv.sizes)
    edges = []
    for i, size in enumerate(inv.sizes):
        base = offsets[i]
        edges.extend((base + a, base + b) for a, b in DistanceSet.greedy(size, inv.matrix[i][i]).pairs())
        for j in range(i + 1, inv.t):
            other = offsets[j]
            passes = passes_for(size, inv.sizes[j], inv.matrix[i][j])
            edges.extend((base + a, other + b) for a, b in residue_pairs(size, inv.sizes[j], range(passes)))

    coloring = [color for color, size in zip(inv.colors, inv.sizes) for _ in range(size)]
    graph = ColoredGraph(Graph(inv.n, edges), coloring)
    witness = tuple(offsets[i] + (v - offsets[i] + 1) % size
                    for i, size in enumerate(inv.sizes) for v in range(offsets[i], offsets[i] + size))
    log.debug(f'multi-circulant representative: {inv.n} vertices, {graph.graph.m} edges, {inv.t} classes')

    if verify and invariant_graph(graph) != inv:
        raise NonCanonicalInvariantException(
            'the classes of this invariant are not the coarsest equitable partition of its realization')
    return Representative(graph, witness)


def canonize_graph(g: ColoredGraph | Graph) -> ColoredGraph:
    """Multi-circulant representative of g's invariant; equal outputs exactly for C2-equivalent inputs"""
    return multi_circulant_representative(invariant_graph(g), verify=False).graph
