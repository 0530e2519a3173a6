import logging
from functools import lru_cache
from itertools import permutations, product
from typing import Sequence

from identification.skeleton import Skeleton
from inversion.coloring import circ_psi, match_psi, orient_color_class
from models.ecpog import ABSENT, IN, OUT, UNDIRECTED, EcPog, ecpog_from_edges
from models.graph import ColoredGraph, Graph
from models.structure import RelationalStructure
from models.verdict import Condition, Relation, RegularCase, Verdict
from refinement.equitable import ecpog_profile
from refinement.refiner import refine_ecpog
from utils.utils import dense_ranks

log = logging.getLogger('c2kit')

REVERSED = {OUT: IN, IN: OUT, UNDIRECTED: UNDIRECTED}


def restrict_arity2(s: RelationalStructure) -> RelationalStructure:
    """Drops every tuple with more than two distinct entries"""
    return s.with_relations({name: [entry for entry in tuples if len(set(entry)) <= 2]
                             for name, tuples in s.relations.items()})


def _mixed_patterns(arity: int) -> list[tuple[int, ...]]:
    return [pattern for pattern in product((0, 1), repeat=arity) if 0 < sum(pattern) < arity]


def ecpog_of(s: RelationalStructure) -> tuple[EcPog, list[int]]:
    """Complete ecPOG of a structure (restricted to arity 2) and the atomic types of its elements.

    The c-value of an ordered pair (v, w) records, for every relation and every way of filling
    its argument places with v and w (both used), whether the tuple holds. A pair is stored in
    the direction with the smaller c-value and undirected when both directions agree.
    """
    features = [(name, pattern) for name, arity in s.signature for pattern in _mixed_patterns(arity)]
    position = {feature: index for index, feature in enumerate(features)}
    swap = [position[(name, tuple(1 - x for x in pattern))] for name, pattern in features]

    n = s.n
    bits: dict[tuple[int, int], set[int]] = {}
    for name, tuples in s.relations.items():
        for entry in tuples:
            elements = sorted(set(entry))
            if len(elements) != 2:
                continue
            low, high = elements
            bits.setdefault((low, high), set()).add(position[(name, tuple(0 if x == low else 1 for x in entry))])

    width = len(features)
    values: dict[tuple[int, int], tuple[int, ...]] = {}
    for u in range(n):
        for v in range(u + 1, n):
            present = bits.get((u, v), ())
            forward = tuple(1 if i in present else 0 for i in range(width))
            values[(u, v)] = forward
            values[(v, u)] = tuple(forward[swap[i]] for i in range(width))

    stored = {}
    for u in range(n):
        for v in range(u + 1, n):
            forward, backward = values[(u, v)], values[(v, u)]
            if forward <= backward:
                stored[(u, v)] = forward
            if backward <= forward:
                stored[(v, u)] = backward
    palette = {value: color for color, value in enumerate(sorted(set(stored.values())))}
    p = ecpog_from_edges(n, directed={pair: palette[value] for pair, value in stored.items()
                                      if (pair[1], pair[0]) not in stored},
                         undirected={pair: palette[value] for pair, value in stored.items()
                                     if pair[0] < pair[1] and (pair[1], pair[0]) in stored})

    atomic = [tuple((v,) * arity in s.relations[name] for name, arity in s.signature) for v in range(n)]
    log.debug(f'ecpog of structure: {n} elements, {len(palette)} edge colors')
    return p, dense_ranks(atomic)


def graph_to_ecpog(g: ColoredGraph | Graph) -> tuple[EcPog, list[int]]:
    """Edges get color 0 and non-edges color 1"""
    if isinstance(g, Graph):
        g = ColoredGraph(g)
    undirected = {(u, v): 0 if g.graph.has_edge(u, v) else 1 for u in range(g.n) for v in range(u + 1, g.n)}
    return ecpog_from_edges(g.n, undirected=undirected), list(g.coloring)


def canonical_form(p: EcPog) -> tuple[int, ...]:
    """Least adjacency word over all vertex orders, colors renamed by first appearance"""
    best = None
    for order in permutations(range(p.n)):
        names: dict[int, int] = {}
        word = []
        for u in order:
            row = p.matrix[u]
            for v in order:
                if u != v:
                    c = row[v]
                    word.append(ABSENT if c == ABSENT else names.setdefault(c, len(names)))
        word = tuple(word)
        if best is None or word < best:
            best = word
    return best


@lru_cache(maxsize=None)
def _template_forms() -> dict[RegularCase, frozenset[tuple[int, ...]]]:
    four_cycle = match_psi(4, (1, 2))
    five_cycles = circ_psi(5, (2, 2))
    templates = {
        RegularCase.DIRECTED_3_CYCLE: [ecpog_from_edges(3, directed={(0, 1): 0, (1, 2): 0, (2, 0): 0})],
        RegularCase.THREE_MATCHINGS_K4: [match_psi(4, (1, 1, 1))],
        RegularCase.CYCLE_4_PLUS_MATCHING: [four_cycle, orient_color_class(four_cycle, 1)],
        RegularCase.REGULAR_TOURNAMENT_5: [orient_color_class(circ_psi(5, (4,)), 0)],
        RegularCase.TWO_FIVE_CYCLES: [five_cycles, orient_color_class(five_cycles, 0),
                                      orient_color_class(five_cycles, 1)],
        RegularCase.FIVE_MATCHINGS_K6: [match_psi(6, (1, 1, 1, 1, 1))],
        RegularCase.CO_C6_PLUS_TWO_MATCHINGS: [match_psi(6, (1, 1, 3))],
    }
    return {case: frozenset(canonical_form(p) for p in ps) for case, ps in templates.items()}


def _case_by_degrees(size: int, degrees: dict[int, tuple[int, int, int]]) -> RegularCase:
    totals = sorted(sum(counts) for counts in degrees.values())
    directed = [c for c, (out, inc, _) in degrees.items() if out or inc]
    undirected_degrees = sorted(und for _, _, und in degrees.values() if und)
    if len(degrees) <= 1:
        if not directed:
            return RegularCase.MONOCHROME_COMPLETE
        return {3: RegularCase.DIRECTED_3_CYCLE, 5: RegularCase.REGULAR_TOURNAMENT_5}.get(
            size, RegularCase.NOT_IDENTIFIED)
    if len(degrees) == 2 and not directed and 1 in totals:
        return RegularCase.MATCHING_PLUS_ONE
    if size == 4 and totals == [1, 2] and undirected_degrees[:1] == [1]:
        return RegularCase.CYCLE_4_PLUS_MATCHING
    if size == 4 and totals == [1, 1, 1] and not directed:
        return RegularCase.THREE_MATCHINGS_K4
    if size == 5 and totals == [2, 2] and len(directed) <= 1:
        return RegularCase.TWO_FIVE_CYCLES
    if size == 6 and totals == [1] * 5 and not directed:
        return RegularCase.FIVE_MATCHINGS_K6
    if size == 6 and totals == [1, 1, 3] and not directed:
        return RegularCase.CO_C6_PLUS_TWO_MATCHINGS
    return RegularCase.NOT_IDENTIFIED


def classify_class(p: EcPog, cls: Sequence[int]) -> RegularCase:
    """Which color-regular complete ecPOG identified by C2 a class induces"""
    sub = p.restrict(cls)
    degrees: dict[int, list[int]] = {}
    for w in range(1, sub.n):
        direction, color = sub.label(0, w)
        degrees.setdefault(color, [0, 0, 0])[direction] += 1
    case = _case_by_degrees(sub.n, {c: tuple(counts) for c, counts in degrees.items()})
    if case.is_exception and case is not RegularCase.MATCHING_PLUS_ONE \
            and canonical_form(sub) not in _template_forms()[case]:
        log.debug(f'class {list(cls)} has the degrees of {case.name} but another shape')
        return RegularCase.NOT_IDENTIFIED
    return case


Layers = dict[tuple[int, int], int]


def _layers_by_target(profile: dict[tuple[int, int, int], int]) -> dict[int, Layers]:
    """Regroups one class profile as target class -> (color, direction) -> count"""
    grouped: dict[int, Layers] = {}
    for (target, direction, color), k in profile.items():
        grouped.setdefault(target, {})[(color, direction)] = k
    return grouped


def _layers(grouped: list[dict[int, Layers]], i: int, j: int) -> dict[tuple[int, int], tuple[int, int]]:
    """(color, direction seen from class i) -> (degree of an i-vertex, degree of a j-vertex)"""
    back = grouped[j].get(i, {})
    return {(color, direction): (k, back[(color, REVERSED[direction])])
            for (color, direction), k in grouped[i].get(j, {}).items()}


def _relation_of_layers(layers: dict[tuple[int, int], tuple[int, int]], sizes: tuple[int, int]) -> Relation:
    if len(layers) <= 1:
        return Relation.EMPTY
    if len(layers) == 2:
        smaller = min(layers, key=lambda layer: (sizes[0] * layers[layer][0], layer))
        k, l = layers[smaller]
        if k == 1 and l == 1:
            return Relation.MATCHED
        if k >= 2 and l == 1:
            return Relation.INTO
        if k == 1 and l >= 2:
            return Relation.FROM
        return Relation.OTHER
    if len(layers) == 3 and sizes == (3, 3) and all(degrees == (1, 1) for degrees in layers.values()):
        return Relation.THREE_MATCHINGS
    return Relation.OTHER


def pair_relation_ec(p: EcPog, cls: Sequence[int], other: Sequence[int]) -> Relation:
    """Relation between two distinct classes, each (color, direction) counted as its own edge color"""
    k_counts: dict[tuple[int, int], int] = {}
    for w in other:
        direction, color = p.label(cls[0], w)
        k_counts[(color, direction)] = k_counts.get((color, direction), 0) + 1
    l_counts: dict[tuple[int, int], int] = {}
    for w in cls:
        direction, color = p.label(other[0], w)
        l_counts[(color, REVERSED[direction])] = l_counts.get((color, REVERSED[direction]), 0) + 1
    layers = {layer: (k, l_counts.get(layer, 0)) for layer, k in k_counts.items()}
    return _relation_of_layers(layers, (len(cls), len(other)))


def identified_c2_ecpog(p: EcPog, coloring: Sequence[int] | None = None) -> Verdict:
    """Decides whether C2 identifies a vertex-colored ecPOG.

    Every class has to induce one of the nine identified color-regular shapes and every pair
    of classes has to be empty, matched, one-to-many or three matchings between triangles
    of size three. The skeleton rules are the same as for graphs.
    """
    partition = refine_ecpog(p, coloring)
    exceptions = []
    for i, cls in enumerate(partition.classes):
        case = classify_class(p, cls)
        if case is RegularCase.NOT_IDENTIFIED:
            verdict = Verdict.negative(Condition.CLASS_SHAPE, f'class {i} of size {len(cls)} induces no '
                                                              f'identified color-regular shape')
            log.debug(f'identify ecpog: {verdict}')
            return verdict
        if case.is_exception:
            exceptions.append(i)

    grouped = [_layers_by_target(ecpog_profile(p, partition, cls[0])) for cls in partition.classes]
    sizes = partition.sizes
    relations = {}
    pairs = []
    for i in range(partition.t):
        for j in range(i + 1, partition.t):
            relation = _relation_of_layers(_layers(grouped, i, j), (sizes[i], sizes[j]))
            if relation is Relation.OTHER:
                verdict = Verdict.negative(Condition.PAIR_RELATION, f'classes {i} and {j}')
                log.debug(f'identify ecpog: {verdict}')
                return verdict
            if relation is Relation.THREE_MATCHINGS:
                pairs.append((i, j))
            relations[(i, j)] = relation

    failure = Skeleton(sizes, relations, exceptions, pairs).violation()
    if failure is not None:
        verdict = Verdict.negative(*failure)
        log.debug(f'identify ecpog: {verdict}')
        return verdict
    log.debug(f'identify ecpog: identified, {partition.t} classes')
    return Verdict.positive()


def identified_c2_structure(s: RelationalStructure) -> Verdict:
    """Structures with a tuple over three distinct elements are never identified; others go through their ecPOG"""
    if s.n >= 3:
        for name, tuples in s.relations.items():
            wide = next((entry for entry in sorted(tuples) if len(set(entry)) >= 3), None)
            if wide is not None:
                return Verdict.negative(Condition.BINARY_ONLY, f'{name}{wide}')
    p, coloring = ecpog_of(restrict_arity2(s))
    return identified_c2_ecpog(p, coloring)
