"""Tests for framed 4-graphs, traversal and vertex smoothing."""

import pytest

from free_links.errors import DiagramError
from free_links.framed_graph import (
    INF,
    FramedGraph,
    from_framed_graph,
    opposite,
    smooth_graph,
    smooth_vertex,
    strand_orientation,
    to_framed_graph,
    traverse,
)
from free_links.gauss_code import parse_diagram
from free_links.models import Resolution, SmoothingChoice


class TestToFramedGraph:
    """Test cases for building graphs from diagrams."""

    def test_counts(self):
        """Test vertex and edge counts of a closed knot."""
        graph = to_framed_graph(parse_diagram("1 2 1 2"))
        assert graph.vertex_count == 2
        assert graph.edge_count == 4
        assert graph.free_loops == 0
        graph.validate_pairing()

    def test_long_component_uses_infinity(self):
        """Test that a long component adds one edge through the point at infinity."""
        graph = to_framed_graph(parse_diagram("@long 1 2 1 2"))
        assert INF in graph.vertices
        assert graph.vertex_count == 2
        assert graph.edge_count == 5

    def test_empty_component_is_free_loop(self):
        """Test crossingless circles."""
        graph = to_framed_graph(parse_diagram("1 1 ; o ; o"))
        assert graph.free_loops == 2
        assert graph.vertex_count == 1

    def test_opposite_slots(self):
        """Test the fixed opposite pairing."""
        assert [opposite(s) for s in range(4)] == [2, 3, 0, 1]

    def test_malformed_pairing(self):
        """Test that a graph with a missing edge is rejected."""
        graph = to_framed_graph(parse_diagram("1 1"))
        broken = FramedGraph(
            vertices=graph.vertices,
            edges=graph.edges[1:],
            occurrences=graph.occurrences,
        )
        with pytest.raises(DiagramError):
            broken.validate_pairing()
        with pytest.raises(DiagramError):
            from_framed_graph(broken)


class TestTraverse:
    """Test cases for traverse and from_framed_graph."""

    @pytest.mark.parametrize(
        "code",
        [
            "1 2 1 2",
            "o",
            "1 1 ; o",
            "@long 1 2 1 2",
            "@ordered +1 2 3 ; 1 ; 2 ; 3",
            "+1 2 1 3 4 ; 2 3 4",
            "@long +1 2 ; 1 2 3 3",
        ],
    )
    def test_round_trip(self, code):
        """Test that reading a built graph gives the diagram back."""
        d = parse_diagram(code)
        assert from_framed_graph(to_framed_graph(d)) == d

    def test_strands_follow_components(self, link):
        """Test that every component is one strand, in order."""
        strands = traverse(to_framed_graph(link))
        assert [s.word for s in strands] == list(link.words)
        assert [s.origins for s in strands] == [{0}, {1}]

    def test_oriented_strand(self, link):
        """Test that only the marked component inherits an orientation."""
        graph = to_framed_graph(link)
        first, second = traverse(graph)
        assert strand_orientation(graph, first) == (True, False)
        assert strand_orientation(graph, second) == (False, False)


class TestSmoothing:
    """Test cases for smooth_vertex and smooth_graph."""

    def test_split_two_crossing_knot(self):
        """Test that the splitting resolution gives two components."""
        graph = smooth_vertex(to_framed_graph(parse_diagram("1 2 1 2")), 1, Resolution.B)
        assert from_framed_graph(graph).words == ((2,), (2,))

    def test_join_two_crossing_knot(self):
        """Test that the joining resolution keeps one component."""
        graph = smooth_vertex(to_framed_graph(parse_diagram("1 2 1 2")), 1, Resolution.A)
        assert from_framed_graph(graph).words == ((2, 2),)

    def test_curl(self):
        """Test both resolutions of a curl."""
        graph = to_framed_graph(parse_diagram("1 1"))
        assert str(from_framed_graph(smooth_vertex(graph, 1, Resolution.A))) == "o"
        assert str(from_framed_graph(smooth_vertex(graph, 1, Resolution.B))) == "o ; o"

    def test_long_curl(self):
        """Test that the long component survives as an empty long component."""
        graph = to_framed_graph(parse_diagram("@long 1 1"))
        assert str(from_framed_graph(smooth_vertex(graph, 1, Resolution.A))) == "@long o"
        assert str(from_framed_graph(smooth_vertex(graph, 1, Resolution.B))) == "@long o ; o"

    def test_unknown_vertex(self):
        """Test smoothing a vertex that does not exist."""
        with pytest.raises(DiagramError):
            smooth_vertex(to_framed_graph(parse_diagram("1 1")), 2, Resolution.A)

    def test_smoothing_keeps_pairing_valid(self, knot):
        """Test that smoothing every vertex leaves only free loops."""
        choice = SmoothingChoice.of({x: Resolution.A for x in knot.labels})
        graph = smooth_graph(to_framed_graph(knot), choice)
        graph.validate_pairing()
        assert graph.vertex_count == 0
        assert graph.free_loops >= 1
