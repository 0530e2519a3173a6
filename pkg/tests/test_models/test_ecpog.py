import pytest

from models.ecpog import ABSENT, IN, OUT, UNDIRECTED, ecpog_from_edges, validate_ecpog
from models.exception import IncompleteEcPogException, InconsistentUndirectedColorException, \
    MalformedInputException, MixedOrientationColorException


@pytest.fixture
def directed_triangle():
    """3-cycle of color 0 oriented 0 -> 1 -> 2 -> 0"""
    return ecpog_from_edges(3, directed={(0, 1): 0, (1, 2): 0, (2, 0): 0})


class TestValidateEcPog:
    """Tests for ecPOG validation"""

    def test_complete_undirected(self):
        """Test a monochrome K3 passes"""
        p = ecpog_from_edges(3, undirected={(0, 1): 0, (1, 2): 0, (0, 2): 0})

        assert p.colors == (0,)
        assert p.directed_colors == frozenset()

    def test_missing_pair(self):
        """Test a pair without color is rejected"""
        with pytest.raises(IncompleteEcPogException):
            ecpog_from_edges(3, undirected={(0, 1): 0, (1, 2): 0})

    def test_inconsistent_undirected(self):
        """Test both directions with different colors are rejected"""
        with pytest.raises(InconsistentUndirectedColorException):
            validate_ecpog(2, {(0, 1): 0, (1, 0): 1})

    def test_mixed_orientation(self):
        """Test one color used both directed and undirected is rejected"""
        with pytest.raises(MixedOrientationColorException):
            ecpog_from_edges(3, undirected={(0, 1): 0, (1, 2): 1}, directed={(0, 2): 0})

    @pytest.mark.parametrize('arc', [(0, 1), (1, 0)])
    def test_pair_given_undirected_and_directed(self, arc):
        """Test a directed arc on a pair already given undirected is rejected, whatever its color"""
        with pytest.raises(MalformedInputException):
            ecpog_from_edges(3, undirected={(0, 1): 0, (1, 2): 0, (0, 2): 0}, directed={arc: 0})


class TestEcPog:
    """Tests for the EcPog model"""

    def test_label(self, directed_triangle):
        """Test labels see arcs from both ends"""
        assert directed_triangle.label(0, 1) == (OUT, 0)
        assert directed_triangle.label(1, 0) == (IN, 0)

    def test_label_undirected(self):
        """Test undirected pairs are labeled UNDIRECTED"""
        p = ecpog_from_edges(2, undirected={(0, 1): 3})

        assert p.label(1, 0) == (UNDIRECTED, 3)
        assert p.color_count == 4

    def test_arcs_list_every_pair_once(self, directed_triangle):
        """Test arcs yields three pairs for a triangle"""
        assert sorted(directed_triangle.arcs()) == [(0, 1, 0), (1, 2, 0), (2, 0, 0)]

    def test_restrict(self, directed_triangle):
        """Test induced sub-ecPOG is renumbered"""
        sub = directed_triangle.restrict([2, 0])

        assert sub.matrix == [[ABSENT, 0], [ABSENT, ABSENT]]
        assert sub.directed_colors == frozenset({0})

    def test_relabel_keeps_direction(self, directed_triangle):
        """Test relabel moves arcs with the vertices"""
        moved = directed_triangle.relabel([1, 2, 0])

        assert moved.label(1, 2) == (OUT, 0)

    def test_serialize_with_coloring(self):
        """Test vertex lines are written for a non-constant coloring"""
        p = ecpog_from_edges(2, directed={(1, 0): 0})

        assert p.serialize([0, 1]) == 'ecpog 2 1\nd 1 0 0\nv 0 0\nv 1 1\n'
        assert p.serialize([0, 0]) == 'ecpog 2 1\nd 1 0 0\n'

    def test_color_subgraph(self):
        """Test one color class as an undirected networkx graph"""
        p = ecpog_from_edges(3, undirected={(0, 1): 0, (1, 2): 1, (0, 2): 1})

        assert p.color_subgraph(1).number_of_edges() == 2
