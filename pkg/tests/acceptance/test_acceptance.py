"""Exhaustive cross-checks between the classifiers, the inversion and the oracles.

Every test here is marked slow; run them with ``pytest -m slow``.
"""
import random
from itertools import combinations, product

import networkx as nx
import pytest

from builders import atlas, complete, cycle
from c2kit.bench import bench
from identification.graphs import identified_c2_graph
from identification.structures import canonical_form, identified_c2_ecpog, identified_c2_structure
from invariants.invariant import invariant_graph
from inversion.coloring import circ_psi, match_psi, orient_color_class
from inversion.factorization import walecki
from inversion.multi_circulant import canonize_graph, multi_circulant_representative
from models.ecpog import ecpog_from_edges, validate_ecpog
from models.exception import MixedOrientationColorException
from models.graph import ColoredGraph, Graph
from models.structure import RelationalStructure
from oracles.cfi import cfi_pair, double_subdivide_h, union_and_subdivide_h
from oracles.enumeration import enumerate_graphs
from oracles.identification import identified_oracle, identified_oracle_ecpog
from oracles.isomorphism import are_isomorphic, automorphism_orbits
from oracles.kwl import kwl_equivalent
from refinement.refiner import refine_graph
from utils.utils import dense_ranks

pytestmark = pytest.mark.slow


def graphs_up_to(n: int):
    for order in range(n + 1):
        yield from enumerate_graphs(order)


def individualized(g: ColoredGraph, v: int) -> ColoredGraph:
    return g.recolor(dense_ranks([(color, u == v) for u, color in enumerate(g.coloring)]))


def ecpogs_on_four(colors: int = 3):
    """Complete ecPOGs on four vertices, one per pair: a color and undirected, forward or backward"""
    pairs = [(u, v) for u in range(4) for v in range(u + 1, 4)]
    for choice in product(range(colors), range(3), repeat=len(pairs)):
        arcs = {}
        for index, (u, v) in enumerate(pairs):
            color, direction = choice[2 * index], choice[2 * index + 1]
            if direction != 1:
                arcs[(u, v)] = color
            if direction != 0:
                arcs[(v, u)] = color
        try:
            yield validate_ecpog(4, arcs)
        except MixedOrientationColorException:
            continue


def colorings(n: int):
    """Every partition of the n vertices as a coloring, colors numbered by first appearance"""
    def extend(prefix, top):
        if len(prefix) == n:
            yield prefix
            return
        for color in range(top + 2):
            yield from extend(prefix + (color,), max(top, color))
    yield from extend((), -1)


def refines(fine, coarse) -> bool:
    return len(set(zip(fine, coarse))) == len(set(fine))


def lost_identification(verdicts: dict) -> list:
    """Pairs (coloring, refinement) where the coloring is identified and the refinement is not"""
    lost = [fine for fine, identified in verdicts.items() if not identified]
    return [(coarse, fine) for coarse, identified in verdicts.items() if identified
            for fine in lost if refines(fine, coarse)]


def tournaments_on_five():
    pairs = list(combinations(range(5), 2))
    for mask in range(1 << len(pairs)):
        yield ecpog_from_edges(5, directed={(u, v) if mask >> i & 1 else (v, u): 0
                                            for i, (u, v) in enumerate(pairs)})


def oriented_graphs_on_five(count: int, seed: int):
    """Seeded random ecPOGs: each pair an arc of color 0 either way or undirected of color 1"""
    rng = random.Random(seed)
    pairs = list(combinations(range(5), 2))
    for _ in range(count):
        directed, undirected = {}, {}
        for u, v in pairs:
            choice = rng.randrange(3)
            if choice == 2:
                undirected[(u, v)] = 1
            else:
                directed[(u, v) if choice == 0 else (v, u)] = 0
        yield ecpog_from_edges(5, undirected=undirected, directed=directed)


def random_digraphs(n: int, count: int, seed: int):
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    for _ in range(count):
        yield [pair for pair in pairs if rng.random() < 0.5]


class TestGraphClassifier:
    """Classifier against the exhaustive oracle"""

    def test_all_graphs_on_six_vertices(self):
        """Test every labeled graph with at most six vertices"""
        discrepancies = [g.sorted_edges() for g in graphs_up_to(6)
                         if bool(identified_c2_graph(g)) != identified_oracle(g)]

        assert discrepancies == []

    def test_sampled_graphs_on_seven_vertices(self):
        """Test seeded random graphs on seven vertices"""
        rng = random.Random(7)
        pairs = [(u, v) for u in range(7) for v in range(u + 1, 7)]
        for _ in range(1000):
            g = Graph(7, [pair for pair in pairs if rng.random() < 0.5])
            assert bool(identified_c2_graph(g)) == identified_oracle(g), g.sorted_edges()

    def test_complements(self):
        """Test a graph and its complement get the same verdict"""
        for g in graphs_up_to(6):
            assert bool(identified_c2_graph(g)) == bool(identified_c2_graph(g.complement())), g.sorted_edges()

    @pytest.mark.parametrize('n', range(1, 7))
    def test_trees(self, n):
        """Test trees are identified"""
        for tree in nx.nonisomorphic_trees(n) if n > 1 else [nx.empty_graph(1)]:
            assert identified_c2_graph(Graph(n, tree.edges()))

    def test_individualization_keeps_identification(self):
        """Test coloring one vertex of an identified graph keeps it identified"""
        for g in graphs_up_to(6):
            colored = ColoredGraph(g)
            if not identified_c2_graph(colored):
                continue
            for v in range(g.n):
                assert identified_c2_graph(individualized(colored, v)), (g.sorted_edges(), v)

    @pytest.mark.parametrize('n', range(1, 7))
    def test_refined_colorings_stay_identified(self, n):
        """Test every refinement of the coloring of an identified colored graph is identified"""
        for g in atlas(n):
            verdicts = {c: bool(identified_c2_graph(ColoredGraph(g, c))) for c in colorings(n)}
            assert lost_identification(verdicts) == [], g.sorted_edges()


class TestOrbits:
    """Classes of identified graphs against automorphism orbits"""

    def test_identified_graphs_up_to_six(self):
        """Test classes and orbits coincide"""
        for g in graphs_up_to(6):
            if identified_c2_graph(g):
                assert refine_graph(g).as_sets() == automorphism_orbits(g).as_sets(), g.sorted_edges()

    def test_sampled_identified_graphs_on_seven(self):
        """Test seeded random graphs on seven vertices"""
        rng = random.Random(11)
        pairs = [(u, v) for u in range(7) for v in range(u + 1, 7)]
        for _ in range(2000):
            g = Graph(7, [pair for pair in pairs if rng.random() < 0.4])
            if identified_c2_graph(g):
                assert refine_graph(g).as_sets() == automorphism_orbits(g).as_sets(), g.sorted_edges()


class TestInversionAndCanonization:
    """Round trips through invariants"""

    def test_round_trip_up_to_six(self):
        """Test the representative has the invariant and a verified witness"""
        for g in graphs_up_to(6):
            invariant = invariant_graph(g)
            representative = multi_circulant_representative(invariant)
            assert invariant_graph(representative.graph) == invariant
            assert representative.witness_verified(refine_graph(representative.graph).classes)

    def test_canon_matches_invariant_up_to_five(self):
        """Test canonical outputs and invariants determine each other"""
        by_canon, by_invariant = {}, {}
        for g in graphs_up_to(5):
            canon = canonize_graph(g).serialize()
            invariant = invariant_graph(g).serialize()
            assert by_canon.setdefault(canon, invariant) == invariant
            assert by_invariant.setdefault(invariant, canon) == canon


class TestStructureClassifier:
    """ecPOG classifier against the exhaustive oracle"""

    def test_all_ecpogs_on_four_vertices(self):
        """Test one ecPOG per isomorphism and color renaming class"""
        seen = set()
        discrepancies = []
        for p in ecpogs_on_four():
            form = canonical_form(p)
            if form in seen:
                continue
            seen.add(form)
            if bool(identified_c2_ecpog(p)) != identified_oracle_ecpog(p):
                discrepancies.append(p.serialize())

        assert discrepancies == []

    @pytest.mark.parametrize('p', [
        circ_psi(5, (4,)),
        match_psi(6, (1, 4)),
        ecpog_from_edges(3, directed={(0, 1): 0, (1, 2): 0, (2, 0): 0}),
        match_psi(4, (1, 1, 1)),
        orient_color_class(match_psi(4, (1, 2)), 1),
        orient_color_class(circ_psi(5, (4,)), 0),
        circ_psi(5, (2, 2)),
        orient_color_class(circ_psi(5, (2, 2)), 0),
        orient_color_class(circ_psi(5, (2, 2)), 1),
        match_psi(6, (1, 1, 1, 1, 1)),
        match_psi(6, (1, 1, 3)),
    ])
    def test_identified_shapes(self, p):
        """Test each identified color-regular shape against the oracle"""
        assert identified_c2_ecpog(p)
        assert identified_oracle_ecpog(p, limit=6)

    def test_binary_structures_individualized(self):
        """Test coloring one element of an identified digraph keeps it identified"""
        pairs = [(u, v) for u in range(4) for v in range(4) if u != v]
        for mask in range(1 << len(pairs)):
            arcs = [pair for i, pair in enumerate(pairs) if mask >> i & 1]
            s = RelationalStructure([('E', 2)], 4, {'E': arcs})
            if not identified_c2_structure(s):
                continue
            for v in range(4):
                marked = RelationalStructure([('E', 2), ('P', 1)], 4, {'E': arcs, 'P': [(v,)]})
                assert identified_c2_structure(marked), (arcs, v)

    def test_refined_colorings_on_four_vertices(self):
        """Test every coloring refinement of an identified two-colored ecPOG on four vertices"""
        seen = set()
        for p in ecpogs_on_four(colors=2):
            form = canonical_form(p)
            if form in seen:
                continue
            seen.add(form)
            verdicts = {c: bool(identified_c2_ecpog(p, c)) for c in colorings(4)}
            assert lost_identification(verdicts) == [], p.serialize()

    def test_refined_colorings_of_tournaments(self):
        """Test every coloring refinement of an identified tournament on five vertices"""
        for p in tournaments_on_five():
            verdicts = {c: bool(identified_c2_ecpog(p, c)) for c in colorings(5)}
            assert lost_identification(verdicts) == [], p.serialize()

    def test_refined_colorings_of_mixed_ecpogs_on_five(self):
        """Test every coloring refinement of seeded ecPOGs mixing arcs and undirected edges"""
        for p in oriented_graphs_on_five(300, seed=5):
            verdicts = {c: bool(identified_c2_ecpog(p, c)) for c in colorings(5)}
            assert lost_identification(verdicts) == [], p.serialize()

    def test_unary_relations_on_five_elements(self):
        """Test adding any unary relation to an identified digraph on five elements keeps it identified"""
        for arcs in random_digraphs(5, 400, seed=13):
            s = RelationalStructure([('E', 2)], 5, {'E': arcs})
            if not identified_c2_structure(s):
                continue
            for mask in range(1 << 5):
                marked = [(v,) for v in range(5) if mask >> v & 1]
                extended = RelationalStructure([('E', 2), ('P', 1)], 5, {'E': arcs, 'P': marked})
                assert identified_c2_structure(extended), (arcs, marked)


class TestCfi:
    """CFI pairs and subdivision gadgets over small bases"""

    @pytest.mark.parametrize('base', [cycle(3), complete(4)])
    def test_pair(self, base):
        """Test the pair is 1-WL equivalent but not isomorphic"""
        pair = cfi_pair(base)

        assert kwl_equivalent(pair.g, pair.g_prime, 1)
        assert not are_isomorphic(pair.g, pair.g_prime)

    @pytest.mark.parametrize('base', [cycle(3), complete(4)])
    def test_designated_vertices(self, base):
        """Test v_p and v_t share a class but not an orbit"""
        designated = union_and_subdivide_h(base)
        v_p, v_t = designated.parallel[0], designated.twisted[0]

        partition = refine_graph(designated.graph)
        assert partition.class_of[v_p] == partition.class_of[v_t]
        orbits = automorphism_orbits(designated.graph)
        assert orbits.class_of[v_p] != orbits.class_of[v_t]

    def test_ladder(self):
        """Test fixing the first parallel vertex separates the second pair by orbit only"""
        designated = double_subdivide_h(cycle(3))
        (first_p, second_p), (first_t, second_t) = designated.parallel, designated.twisted

        orbits = automorphism_orbits(designated.graph)
        assert orbits.class_of[first_p] == orbits.class_of[first_t]
        assert orbits.class_of[second_p] == orbits.class_of[second_t]

        fixed = individualized(designated.graph, first_p)
        assert refine_graph(fixed).class_of[second_p] == refine_graph(fixed).class_of[second_t]
        orbits = automorphism_orbits(fixed)
        assert orbits.class_of[second_p] != orbits.class_of[second_t]


class TestWalecki:
    """1-factorizations of K_n"""

    @pytest.mark.parametrize('n', [*range(2, 202, 2), 500, 1000])
    def test_valid_and_hamiltonian(self, n):
        """Test validity and the Hamiltonian union of the first two matchings"""
        factorization = walecki(n)

        assert factorization.violations() == []
        if n >= 4:
            assert factorization.is_hamiltonian_pair(0, 1)


class TestPerformance:
    """Envelope checks on growth"""

    def test_refine(self):
        """Test tenfold inputs take at most fifteen times longer"""
        report = bench('refine', [10_000, 100_000, 1_000_000], seed=0)

        assert all(ratio <= 15 for ratio in report.ratios), report.serialize()

    def test_identify_structure(self):
        """Test doubling the universe takes at most five times longer"""
        report = bench('identify-structure', [100, 200, 400], seed=0)

        assert all(ratio <= 5 for ratio in report.ratios), report.serialize()
