import logging
from typing import NamedTuple, Sequence

import networkx as nx

from models.exception import MalformedInputException
from models.graph import ColoredGraph, Graph

log = logging.getLogger('c2kit')

BOUQUET_CYCLE = 5


class Bouquet(NamedTuple):
    cycle: tuple[int, ...]
    trees: tuple[frozenset[int], ...]
    code: tuple[int, ...]


class BouquetForest(NamedTuple):
    """Decomposition of a colored graph into trees and bouquets; ``reason`` says why it failed"""
    is_bouquet_forest: bool
    trees: list[frozenset[int]]
    bouquets: list[Bouquet]
    reason: str = ''


class TreeCoder:
    """Interns rooted colored trees: equal codes exactly for isomorphic (tree, root, coloring) triples"""

    def __init__(self, coloring: Sequence[int]):
        self.coloring = coloring
        self.table: dict[tuple, int] = {}

    def code(self, graph: nx.Graph, root: int, blocked: frozenset[int] = frozenset()) -> int:
        parent = {root: None}
        order = [root]
        for v in order:
            for w in graph[v]:
                if w not in parent and w not in blocked:
                    parent[w] = v
                    order.append(w)
        children: dict[int, list[int]] = {v: [] for v in order}
        codes: dict[int, int] = {}
        for v in reversed(order):
            key = (self.coloring[v], tuple(sorted(codes[c] for c in children[v])))
            codes[v] = self.table.setdefault(key, len(self.table))
            if parent[v] is not None:
                children[parent[v]].append(v)
        return codes[root]


def _dihedral_minimum(codes: Sequence[int]) -> tuple[int, ...]:
    length = len(codes)
    variants = []
    for sequence in (list(codes), list(reversed(codes))):
        variants.extend(tuple(sequence[s:] + sequence[:s]) for s in range(length))
    return min(variants)


def bouquet_forest_check(graph: ColoredGraph) -> BouquetForest:
    """Splits a colored graph into trees and bouquets, which must be pairwise non-isomorphic"""
    nx_graph = graph.graph.to_networkx()
    coder = TreeCoder(graph.coloring)
    trees: list[frozenset[int]] = []
    bouquets: list[Bouquet] = []
    for component in sorted(nx.connected_components(nx_graph), key=min):
        sub = nx_graph.subgraph(component)
        edges = sub.number_of_edges()
        if edges == len(component) - 1:
            trees.append(frozenset(component))
            continue
        if edges != len(component):
            return BouquetForest(False, trees, bouquets, f'component of vertex {min(component)} has '
                                                         f'{edges - len(component) + 1} independent cycles')
        cycle_edges = nx.find_cycle(sub, source=min(component))
        cycle = [u for u, _ in cycle_edges]
        if len(cycle) != BOUQUET_CYCLE:
            return BouquetForest(False, trees, bouquets, f'component of vertex {min(component)} has a '
                                                         f'{len(cycle)}-cycle')
        on_cycle = frozenset(cycle)
        codes = [coder.code(sub, root, on_cycle - {root}) for root in cycle]
        if len(set(codes)) != 1:
            return BouquetForest(False, trees, bouquets, f'trees hanging from the cycle {cycle} differ')
        branches = []
        for root in cycle:
            reached = nx.node_connected_component(sub.subgraph(component - (on_cycle - {root})), root)
            branches.append(frozenset(reached))
        bouquets.append(Bouquet(tuple(cycle), tuple(branches), _dihedral_minimum(codes)))

    seen: dict[tuple[int, ...], Bouquet] = {}
    for bouquet in bouquets:
        if bouquet.code in seen:
            return BouquetForest(False, trees, bouquets, f'bouquets on cycles {seen[bouquet.code].cycle} '
                                                         f'and {bouquet.cycle} are isomorphic')
        seen[bouquet.code] = bouquet
    log.debug(f'bouquet forest: {len(trees)} trees, {len(bouquets)} bouquets')
    return BouquetForest(True, trees, bouquets)


def bouquet(tree: ColoredGraph | Graph, root: int = 0) -> ColoredGraph:
    """Five copies of a rooted (colored) tree whose roots are joined into a 5-cycle; copy c takes vertices c*n.."""
    if isinstance(tree, Graph):
        tree = ColoredGraph(tree)
    if not nx.is_tree(tree.graph.to_networkx()):
        raise MalformedInputException('bouquets are built from a tree')
    n = tree.n
    edges = [(c * n + u, c * n + v) for c in range(BOUQUET_CYCLE) for u, v in tree.graph.sorted_edges()]
    edges.extend((c * n + root, (c + 1) % BOUQUET_CYCLE * n + root) for c in range(BOUQUET_CYCLE))
    return ColoredGraph(Graph(BOUQUET_CYCLE * n, edges), list(tree.coloring) * BOUQUET_CYCLE)
