import logging
from typing import Sequence

import networkx as nx

from inversion.circulant import passes_for, residue_pairs
from inversion.exception import DegreeSumMismatchException, InfeasibleInvariantException, \
    NonCanonicalInvariantException, OddColorDegreeException, OddDegreeInColorException, ParityInfeasibleException
from inversion.factorization import walecki
from inversion.multi_circulant import class_offsets
from invariants.invariant import invariant_ecpog
from models.ecpog import ABSENT, EcPog
from models.invariant import EcInvariant

log = logging.getLogger('c2kit')


def _palette(degrees: Sequence[int], colors: Sequence[int] | None) -> list[int]:
    colors = list(colors) if colors is not None else list(range(len(degrees)))
    if len(colors) != len(degrees) or len(set(colors)) != len(colors):
        raise InfeasibleInvariantException(f'{len(colors)} distinct colors needed for {len(degrees)} degrees')
    return colors


def circ_psi(n: int, degrees: Sequence[int], colors: Sequence[int] | None = None) -> EcPog:
    """Complete undirected circulant coloring on n (odd) vertices.

    The first d_1/2 distances get the first color, the next d_2/2 the second and so on, so
    every vertex sees d_i edges of color i.
    """
    if n % 2 == 0:
        raise ParityInfeasibleException(f'circulant colorings need an odd order, got {n}')
    palette = _palette(degrees, colors)
    odd = [d for d in degrees if d % 2]
    if odd:
        raise OddColorDegreeException(f'color degrees {odd} are odd on an odd number of vertices')
    if sum(degrees) != n - 1:
        raise DegreeSumMismatchException(f'color degrees sum to {sum(degrees)}, K_{n} needs {n - 1}')

    by_distance = [ABSENT]
    for color, degree in zip(palette, degrees):
        by_distance.extend([color] * (degree // 2))
    matrix = [[ABSENT] * n for _ in range(n)]
    for u in range(n):
        for v in range(n):
            if u != v:
                distance = min((u - v) % n, (v - u) % n)
                matrix[u][v] = by_distance[distance]
    return EcPog(n, matrix, frozenset())


def match_psi(n: int, degrees: Sequence[int], colors: Sequence[int] | None = None) -> EcPog:
    """Colors the Walecki matchings of K_n (n even): the first d_1 matchings get the first color, and so on"""
    palette = _palette(degrees, colors)
    if n % 2:
        raise ParityInfeasibleException(f'matching colorings need an even order, got {n}')
    if sum(degrees) != n - 1:
        raise DegreeSumMismatchException(f'color degrees sum to {sum(degrees)}, K_{n} needs {n - 1}')

    by_matching = [color for color, degree in zip(palette, degrees) for _ in range(degree)]
    matrix = [[ABSENT] * n for _ in range(n)]
    for color, matching in zip(by_matching, walecki(n).matchings):
        for u, v in matching:
            matrix[u][v] = matrix[v][u] = color
    return EcPog(n, matrix, frozenset())


def orient_color_class(p: EcPog, color: int) -> EcPog:
    """Directs one undirected color along Euler circuits so that in- and out-degrees agree.

    Components are visited from their smallest vertex with neighbours in ascending order.
    """
    if p.is_directed(color):
        return p
    edges = sorted((u, v) for u, v, c in p.arcs() if c == color)
    graph = nx.Graph()
    graph.add_nodes_from(sorted({v for edge in edges for v in edge}))
    graph.add_edges_from(edges)
    odd = [v for v, degree in graph.degree if degree % 2]
    if odd:
        raise OddDegreeInColorException(f'color {color} has odd degree at vertices {odd[:10]}')

    matrix = [row[:] for row in p.matrix]
    for component in sorted(nx.connected_components(graph), key=min):
        if len(component) < 2:
            continue
        for u, v in nx.eulerian_circuit(graph.subgraph(component), source=min(component)):
            matrix[v][u] = ABSENT
    log.debug(f'oriented color {color}: {len(edges)} arcs')
    return EcPog(p.n, matrix, p.directed_colors | {color})


def _diagonal_block(size: int, entry: dict[int, tuple[int, int, int]]) -> EcPog:
    colors = sorted(entry)
    degrees = [out + inc + und for out, inc, und in (entry[c] for c in colors)]
    block = circ_psi(size, degrees, colors) if size % 2 else match_psi(size, degrees, colors)
    for color in colors:
        out, inc, _ = entry[color]
        if out or inc:
            block = orient_color_class(block, color)
    return block


def invert_ec(inv: EcInvariant, verify: bool = True) -> tuple[EcPog, list[int]]:
    """Builds an ecPOG with the given invariant and returns it with its vertex coloring.

    Classes are filled by circ_psi or match_psi with directed colors oriented afterwards.
    Between two classes every (color, direction) layer takes the next block of residue
    passes of the doubly-circulant construction.
    """
    problems = inv.violations()
    if problems:
        raise InfeasibleInvariantException('; '.join(problems))

    offsets = class_offsets(inv.sizes)
    n = inv.n
    matrix = [[ABSENT] * n for _ in range(n)]
    for i, size in enumerate(inv.sizes):
        base = offsets[i]
        if size > 1:
            block = _diagonal_block(size, inv.entry(i, i))
            for a in range(size):
                for b in range(size):
                    matrix[base + a][base + b] = block.matrix[a][b]
        for j in range(i + 1, inv.t):
            other = offsets[j]
            next_residue = 0
            for color, (out, inc, und) in sorted(inv.entry(i, j).items()):
                for degree, forward, backward in ((out, True, False), (inc, False, True), (und, True, True)):
                    passes = passes_for(size, inv.sizes[j], degree)
                    residues = range(next_residue, next_residue + passes)
                    next_residue += passes
                    for a, b in residue_pairs(size, inv.sizes[j], residues):
                        if forward:
                            matrix[base + a][other + b] = color
                        if backward:
                            matrix[other + b][base + a] = color

    coloring = [color for color, size in zip(inv.colors, inv.sizes) for _ in range(size)]
    result = EcPog(n, matrix, inv.directed_colors)
    log.debug(f'inverted ecpog invariant: {n} vertices, {inv.t} classes, colors {result.colors}')
    if verify and invariant_ecpog(result, coloring) != inv:
        raise NonCanonicalInvariantException(
            'the classes of this invariant are not the coarsest equitable partition of its realization')
    return result, coloring
