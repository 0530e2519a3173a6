import logging
from typing import Sequence

from invariants.invariant import invariant_ecpog, invariant_graph
from models.ecpog import EcPog
from models.graph import ColoredGraph, Graph
from oracles.enumeration import ecpog_realizations, graph_realizations
from oracles.isomorphism import are_isomorphic, are_isomorphic_ecpog
from utils.utils import dense_ranks

log = logging.getLogger('c2kit')


def identified_oracle(g: ColoredGraph | Graph) -> bool:
    """True iff every graph with g's C2 invariant is isomorphic to g.

    Only realizations on the class blocks of the invariant are searched; every C2-equivalent
    graph is isomorphic to one of them.
    """
    g = g if isinstance(g, ColoredGraph) else ColoredGraph(g)
    invariant = invariant_graph(g)
    for candidate in graph_realizations(invariant):
        if invariant_graph(candidate) != invariant:
            continue
        if not are_isomorphic(candidate, g):
            log.debug(f'oracle: {candidate.graph.sorted_edges()} is equivalent to but not isomorphic with the input')
            return False
    return True


def identified_oracle_ecpog(p: EcPog, coloring: Sequence[int] | None = None, limit: int = 5) -> bool:
    """Same search over complete ecPOGs with the ecPOG invariant"""
    coloring = dense_ranks(coloring) if coloring is not None else [0] * p.n
    invariant = invariant_ecpog(p, coloring)
    for candidate, candidate_coloring in ecpog_realizations(invariant, limit):
        if invariant_ecpog(candidate, candidate_coloring) != invariant:
            continue
        if not are_isomorphic_ecpog(candidate, p, candidate_coloring, coloring):
            log.debug(f'oracle: {candidate!r} is equivalent to but not isomorphic with the input')
            return False
    return True
