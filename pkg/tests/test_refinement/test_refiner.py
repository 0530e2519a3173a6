import random
from itertools import combinations, permutations

import pytest

from builders import cycle, disjoint_union, path, shuffled, star
from models.ecpog import ecpog_from_edges
from models.graph import ColoredGraph, Graph
from models.partition import OrderedPartition, RefinementTrace
from refinement.equitable import is_equitable, is_equitable_ecpog, quotient_matrix
from refinement.exception import SignatureCollisionException
from refinement.refiner import GraphRefiner, decode_label, refine_ecpog, refine_graph
from refinement.signatures import class_signatures
from utils.utils import dense_ranks


class TestRefineGraph:
    """Tests for color refinement of graphs"""

    def test_path_on_three_vertices(self):
        """Test the centre of P3 is its own class and comes first"""
        partition = refine_graph(path(3))

        assert partition.classes == ((1,), (0, 2))

    @pytest.mark.parametrize('g', [cycle(6), disjoint_union(cycle(3), cycle(3)), Graph(4)])
    def test_regular_graphs_stay_one_class(self, g):
        """Test regular graphs are not split"""
        assert refine_graph(g).t == 1

    def test_petersen_is_one_class(self, petersen):
        """Test the Petersen graph stays a single class"""
        assert refine_graph(petersen).sizes == (10,)

    def test_long_path(self):
        """Test P7 splits into its four distance classes from the centre"""
        partition = refine_graph(path(7))

        assert partition.as_sets() == {frozenset({3}), frozenset({2, 4}), frozenset({1, 5}), frozenset({0, 6})}

    def test_coloring_is_respected(self, colored_path):
        """Test a colored end makes every vertex of the path distinguishable"""
        partition = refine_graph(colored_path)

        assert partition.is_discrete
        assert partition.colors is not None

    def test_result_is_equitable(self, petersen):
        """Test the stable partition of a mixed graph is equitable"""
        g = disjoint_union(path(5), cycle(4), petersen)
        partition = refine_graph(g)

        assert is_equitable(g, partition)

    @pytest.mark.parametrize('seed', range(5))
    def test_class_order_does_not_depend_on_labels(self, seed):
        """Test relabeling moves classes but keeps their order and signatures"""
        g = disjoint_union(path(6), cycle(5), Graph(3, [(0, 1)]))
        h, permutation = shuffled(g, seed)

        original = refine_graph(g)
        relabeled = refine_graph(h)

        assert relabeled.signatures == original.signatures
        assert relabeled.classes == tuple(tuple(sorted(permutation[v] for v in cls)) for cls in original.classes)
        assert quotient_matrix(h, relabeled) == quotient_matrix(g, original)

    def test_empty_graph(self):
        """Test zero vertices give zero classes"""
        assert refine_graph(Graph(0)).t == 0

    def test_steps_are_counted(self):
        """Test the refiner records how many splitters it processed"""
        trace = GraphRefiner(ColoredGraph(path(3))).run()

        assert trace.steps == 2
        assert len(trace) == 2


class TestRefineEcPog:
    """Tests for color refinement of ecPOGs"""

    def test_directed_triangle_is_one_class(self):
        """Test a directed 3-cycle is vertex-transitive"""
        p = ecpog_from_edges(3, directed={(0, 1): 0, (1, 2): 0, (2, 0): 0})

        assert refine_ecpog(p).t == 1

    def test_transitive_tournament_is_discrete(self):
        """Test the transitive tournament on three vertices splits completely"""
        p = ecpog_from_edges(3, directed={(0, 1): 0, (1, 2): 0, (0, 2): 0})
        partition = refine_ecpog(p)

        assert partition.is_discrete
        assert is_equitable_ecpog(p, partition)

    def test_colors_split(self):
        """Test an edge color seen by one vertex only splits it off"""
        p = ecpog_from_edges(3, undirected={(0, 1): 0, (0, 2): 0, (1, 2): 1})

        assert refine_ecpog(p).as_sets() == {frozenset({0}), frozenset({1, 2})}

    def test_vertex_coloring(self):
        """Test a vertex coloring refines a monochrome K3"""
        p = ecpog_from_edges(3, undirected={(0, 1): 0, (0, 2): 0, (1, 2): 0})

        assert refine_ecpog(p, [0, 0, 1]).as_sets() == {frozenset({0, 1}), frozenset({2})}

    @pytest.mark.parametrize('code, label', [(0, (0, 0)), (5, (2, 1)), (7, (1, 2))])
    def test_decode_label(self, code, label):
        """Test packed labels decode to (direction, color)"""
        assert decode_label(code) == label


class TestClassSignatures:
    """Tests for canonical class ordering"""

    def test_collision_is_reported(self):
        """Test two cells with one signature raise"""
        trace = RefinementTrace([[0], [1]], [0, 0], [0, 0], [(), ()], 0)

        with pytest.raises(SignatureCollisionException):
            class_signatures(trace)

    def test_signature_fields(self):
        """Test signatures record round, color, size and profile"""
        trace = RefinementTrace([[0, 2], [1]], [0, 0], [1, 1], [((1, 0, 1),), ((0, 0, 2),)], 2)

        signatures = class_signatures(trace)

        assert signatures[0].size == 2
        assert signatures[1].profile == ((0, 0, 2),)


def naive_refinement(g: ColoredGraph) -> set[frozenset[int]]:
    """Recolors by (color, sorted neighbour colors) until the number of colors stops growing"""
    colors = dense_ranks(g.coloring)
    while True:
        refined = dense_ranks([(colors[v], tuple(sorted(colors[w] for w in g.graph.adjacency[v])))
                               for v in range(g.n)])
        if len(set(refined)) == len(set(colors)):
            return OrderedPartition.from_labels(colors).as_sets()
        colors = refined


def random_colored_graph(n: int, seed: int) -> ColoredGraph:
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 3 / n]
    return ColoredGraph(Graph(n, edges), dense_ranks([rng.randrange(2) for _ in range(n)]))


class TestCanonicalOrder:
    """Tests the class order under every relabeling of small graphs"""

    @pytest.mark.parametrize('g', [
        ColoredGraph(path(6)),
        ColoredGraph(star(5)),
        ColoredGraph(disjoint_union(path(3), cycle(3))),
        ColoredGraph(Graph(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])),
        ColoredGraph(cycle(6), [0, 1, 0, 0, 1, 0]),
    ])
    def test_every_relabeling(self, g):
        """Test all n! relabelings give the same signatures and map the classes onto each other"""
        original = refine_graph(g)
        for permutation in permutations(range(g.n)):
            relabeled = refine_graph(g.relabel(permutation))

            assert relabeled.signatures == original.signatures
            assert relabeled.classes == tuple(tuple(sorted(permutation[v] for v in cls)) for cls in original.classes)


class TestCoarsest:
    """Tests the stable partition is the coarsest equitable one"""

    @pytest.mark.parametrize('n, seed', [(n, seed) for n in (10, 20, 35, 50) for seed in range(3)])
    def test_matches_naive_refinement(self, n, seed):
        """Test the refiner and plain iterated recoloring find the same classes"""
        g = random_colored_graph(n, seed)
        partition = refine_graph(g)

        assert is_equitable(g.graph, partition)
        assert partition.as_sets() == naive_refinement(g)

    @pytest.mark.parametrize('n, seed', [(n, seed) for n in (12, 30, 50) for seed in range(2)])
    def test_merging_two_classes_breaks_equitability(self, n, seed):
        """Test no two classes of the same initial color can be merged"""
        g = random_colored_graph(n, seed)
        partition = refine_graph(g)
        for i, j in combinations(range(partition.t), 2):
            first, second = partition.classes[i], partition.classes[j]
            if g.coloring[first[0]] != g.coloring[second[0]]:
                continue
            merged = [cls for k, cls in enumerate(partition.classes) if k not in (i, j)] + [first + second]

            assert not is_equitable(g.graph, OrderedPartition(merged)), (i, j)

    def test_six_cycle_with_two_triangles(self):
        """Test a regular union stays one class although its parts differ"""
        g = ColoredGraph(disjoint_union(cycle(6), cycle(3), cycle(3)))

        assert refine_graph(g).as_sets() == naive_refinement(g) == {frozenset(range(12))}
