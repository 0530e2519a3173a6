import logging
from typing import Sequence

from models.ecpog import EcPog
from models.graph import ColoredGraph, Graph
from models.invariant import C2Invariant, EcInvariant
from models.partition import OrderedPartition
from refinement.equitable import ecpog_profile, quotient_matrix
from refinement.refiner import refine_ecpog, refine_graph

log = logging.getLogger('c2kit')


def graph_invariant_of(g: ColoredGraph, partition: OrderedPartition) -> C2Invariant:
    """Invariant read off an already computed C2-partition of g"""
    return C2Invariant(partition.sizes, quotient_matrix(g, partition), partition.colors)


def invariant_graph(g: ColoredGraph | Graph) -> C2Invariant:
    if isinstance(g, Graph):
        g = ColoredGraph(g)
    invariant = graph_invariant_of(g, refine_graph(g))
    log.debug(f'graph invariant: t={invariant.t}, sizes={invariant.sizes}')
    return invariant


def ecpog_invariant_of(p: EcPog, partition: OrderedPartition) -> EcInvariant:
    matrix = []
    for cls in partition.classes:
        counts = ecpog_profile(p, partition, cls[0])
        row: list[dict[int, list[int]]] = [{} for _ in range(partition.t)]
        for (target, direction, color), count in counts.items():
            # directions OUT, IN, UNDIRECTED are 0, 1, 2
            row[target].setdefault(color, [0, 0, 0])[direction] += count
        matrix.append([tuple((color, *triple) for color, triple in sorted(entry.items())) for entry in row])
    return EcInvariant(partition.sizes, matrix, partition.colors)


def invariant_ecpog(p: EcPog, coloring: Sequence[int] | None = None) -> EcInvariant:
    invariant = ecpog_invariant_of(p, refine_ecpog(p, coloring))
    log.debug(f'ecpog invariant: t={invariant.t}, sizes={invariant.sizes}')
    return invariant


def invariants_equal(a: C2Invariant | EcInvariant, b: C2Invariant | EcInvariant) -> bool:
    """Structural comparison; class order is already canonical"""
    return type(a) is type(b) and a == b
