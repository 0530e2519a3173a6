import pytest

from builders import cycle, disjoint_union, path
from oracles.cfi import cfi_graph, cfi_pair, double_subdivide_h, union_and_subdivide_h
from oracles.exception import DegreeTooSmallException, DisconnectedBaseException
from oracles.isomorphism import are_isomorphic, automorphism_orbits
from oracles.kwl import kwl_equivalent
from refinement.refiner import refine_graph


class TestCfiPair:
    """Tests for CFI graphs over small base graphs"""

    def test_triangle_layout(self):
        """Test gadget sizes over a triangle"""
        pair = cfi_pair(cycle(3))

        # per base vertex: two middle vertices and two outer pairs
        assert pair.g.n == 18
        assert pair.g.graph.m == pair.g_prime.graph.m
        assert sum(pair.twists.values()) == 1

    def test_twisted_connection(self):
        """Test the two graphs differ in the first base edge only"""
        pair = cfi_pair(cycle(3))

        assert pair.g.graph.has_edge(pair.a, pair.a_prime)
        assert pair.g.graph.has_edge(pair.b, pair.b_prime)
        assert pair.g_prime.graph.has_edge(pair.a, pair.b_prime)
        assert pair.g_prime.graph.has_edge(pair.b, pair.a_prime)
        assert not pair.g_prime.graph.has_edge(pair.a, pair.a_prime)

    def test_fools_color_refinement(self):
        """Test the pair is 1-WL equivalent but not isomorphic"""
        pair = cfi_pair(cycle(3))

        assert kwl_equivalent(pair.g, pair.g_prime, 1)
        assert not are_isomorphic(pair.g, pair.g_prime)

    def test_twist_parity(self):
        """Test two twists on a 4-cycle give a graph isomorphic to the untwisted one"""
        base = cycle(4)
        edges = base.sorted_edges()

        assert are_isomorphic(cfi_graph(base), cfi_graph(base, edges[:2]))
        assert not are_isomorphic(cfi_graph(base), cfi_graph(base, edges[:3]))

    def test_disconnected_base(self):
        """Test disconnected bases are refused"""
        with pytest.raises(DisconnectedBaseException):
            cfi_pair(disjoint_union(cycle(3), cycle(3)))

    def test_thin_base(self):
        """Test base vertices of degree one are refused"""
        with pytest.raises(DegreeTooSmallException):
            cfi_pair(path(3))


class TestDesignatedVertices:
    """Tests for the subdivision constructions"""

    def test_union_and_subdivide(self):
        """Test the designated vertices share a class but not an orbit"""
        designated = union_and_subdivide_h(cycle(3))
        v_p, v_t = designated.parallel[0], designated.twisted[0]

        partition = refine_graph(designated.graph)
        orbits = automorphism_orbits(designated.graph)

        assert partition.class_of[v_p] == partition.class_of[v_t]
        assert orbits.class_of[v_p] != orbits.class_of[v_t]

    def test_double_subdivide(self):
        """Test the ladder variant adds two designated pairs"""
        designated = double_subdivide_h(cycle(3))

        assert len(designated.parallel) == len(designated.twisted) == 2
        assert designated.graph.n == 18 + 2 + 2 * (4 + 2)
        for v_p, v_t in zip(designated.parallel, designated.twisted):
            assert designated.graph.coloring[v_p] == designated.graph.coloring[v_t]
