import logging
from itertools import combinations, product
from typing import Iterator, Sequence

from inversion.multi_circulant import class_offsets
from models.ecpog import IN, OUT, UNDIRECTED, EcPog, validate_ecpog
from models.graph import ColoredGraph, Graph
from models.invariant import C2Invariant, EcInvariant
from oracles.exception import TooLargeException
from utils.constants import MAX_ENUMERATION_ORDER

log = logging.getLogger('c2kit')

Pair = tuple[int, int]


def _guard(n: int, limit: int = MAX_ENUMERATION_ORDER):
    if n > limit:
        raise TooLargeException(f'exhaustive enumeration stops at {limit} vertices, got {n}')


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """All labeled graphs on n vertices; bit i of the counter decides the i-th pair in lexicographic order"""
    _guard(n)
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [pair for i, pair in enumerate(pairs) if mask >> i & 1])


def _degree_constrained(pairs: Sequence[Pair], demand: dict[int, int]) -> Iterator[list[Pair]]:
    """Subsets of pairs in which every vertex v lies on exactly demand[v] chosen pairs"""
    remaining_slots = dict.fromkeys(demand, 0)
    for u, v in pairs:
        remaining_slots[u] += 1
        remaining_slots[v] += 1
    need = dict(demand)
    chosen: list[Pair] = []

    def extend(index: int) -> Iterator[list[Pair]]:
        if index == len(pairs):
            if not any(need.values()):
                yield list(chosen)
            return
        u, v = pairs[index]
        remaining_slots[u] -= 1
        remaining_slots[v] -= 1
        if need[u] and need[v]:
            need[u] -= 1
            need[v] -= 1
            chosen.append((u, v))
            yield from extend(index + 1)
            chosen.pop()
            need[u] += 1
            need[v] += 1
        if need[u] <= remaining_slots[u] and need[v] <= remaining_slots[v]:
            yield from extend(index + 1)
        remaining_slots[u] += 1
        remaining_slots[v] += 1

    yield from extend(0)


def graph_realizations(inv: C2Invariant) -> Iterator[ColoredGraph]:
    """Every graph on 0..n-1 in which the consecutive class blocks form an equitable partition with inv's quotient.

    Graphs C2-equivalent to a realization of inv are isomorphic to at least one of these.
    """
    _guard(inv.n)
    offsets = class_offsets(inv.sizes)
    blocks = [range(offsets[i], offsets[i + 1]) for i in range(inv.t)]
    choices = []
    for i in range(inv.t):
        for j in range(i, inv.t):
            if i == j:
                pairs = list(combinations(blocks[i], 2))
                demand = dict.fromkeys(blocks[i], inv.matrix[i][i])
            else:
                pairs = list(product(blocks[i], blocks[j]))
                demand = {**dict.fromkeys(blocks[i], inv.matrix[i][j]), **dict.fromkeys(blocks[j], inv.matrix[j][i])}
            choices.append(list(_degree_constrained(pairs, demand)))
    coloring = [color for color, size in zip(inv.colors, inv.sizes) for _ in range(size)]
    for parts in product(*choices):
        yield ColoredGraph(Graph(inv.n, [pair for part in parts for pair in part]), coloring)


def ecpog_realizations(inv: EcInvariant, limit: int = 5) -> Iterator[tuple[EcPog, list[int]]]:
    """Every complete ecPOG on 0..n-1 whose consecutive class blocks carry inv's color/direction counts"""
    _guard(inv.n, limit)
    offsets = class_offsets(inv.sizes)
    block = [i for i, size in enumerate(inv.sizes) for _ in range(size)]
    budget: list[dict[tuple[int, int, int], int]] = []
    for v in range(inv.n):
        counts = {}
        for j in range(inv.t):
            for color, (out, inc, und) in inv.entry(block[v], j).items():
                for direction, count in ((OUT, out), (IN, inc), (UNDIRECTED, und)):
                    if count:
                        counts[(j, direction, color)] = count
        budget.append(counts)
    directed = inv.directed_colors
    colors = inv.edge_colors
    pairs = list(combinations(range(inv.n), 2))
    arcs: dict[Pair, int] = {}

    def take(v: int, key: tuple[int, int, int]) -> bool:
        if budget[v].get(key, 0) <= 0:
            return False
        budget[v][key] -= 1
        return True

    def extend(index: int) -> Iterator[dict[Pair, int]]:
        if index == len(pairs):
            yield dict(arcs)
            return
        u, v = pairs[index]
        for color in colors:
            if color in directed:
                options = (((u, v), (block[v], OUT, color), (block[u], IN, color)),
                           ((v, u), (block[v], IN, color), (block[u], OUT, color)))
            else:
                options = (((u, v), (block[v], UNDIRECTED, color), (block[u], UNDIRECTED, color)),)
            for arc, key_u, key_v in options:
                if not take(u, key_u):
                    continue
                if take(v, key_v):
                    arcs[arc] = color
                    if color not in directed:
                        arcs[(v, u)] = color
                    yield from extend(index + 1)
                    arcs.pop(arc)
                    arcs.pop((v, u), None)
                    budget[v][key_v] += 1
                budget[u][key_u] += 1

    coloring = [color for color, size in zip(inv.colors, inv.sizes) for _ in range(size)]
    produced = 0
    for result in extend(0):
        produced += 1
        yield validate_ecpog(inv.n, result), coloring
    log.debug(f'ecpog realizations: {produced} for blocks {offsets}')
