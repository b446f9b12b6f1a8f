"""Tests for the Graph class."""

import logging
import networkx as nx
import pytest
from burning.graph import Graph
from burning.exceptions import BurningError, EmptyGraphError, VertexOutOfRangeError
from burning.generators import complete_graph, cycle_graph, path_graph


def test_from_edges_builds_symmetric_sorted_adjacency():
    """Edges are stored in both directions and sorted."""
    graph = Graph.from_edges(4, [(2, 0), (0, 1), (3, 0)], name="star")
    assert graph.adjacency == ((1, 2, 3), (0,), (0,), (0,))
    assert graph.name == "star"
    assert graph.vertex_count == 4
    assert graph.edge_count == 3
    assert len(graph) == 4


def test_from_edges_drops_loops_and_duplicates(caplog):
    """Self-loops are dropped and duplicates collapsed, each with a warning."""
    with caplog.at_level(logging.WARNING, logger="burning.graph"):
        graph = Graph.from_edges(3, [(0, 1), (1, 0), (1, 1), (1, 2), (0, 1)])
    assert graph.edge_count == 2
    assert list(graph.edges()) == [(0, 1), (1, 2)]
    assert "self-loops" in caplog.text
    assert "duplicate" in caplog.text


def test_from_edges_rejects_out_of_range_vertices():
    """Vertex ids must lie in 0..n-1."""
    with pytest.raises(VertexOutOfRangeError) as error:
        Graph.from_edges(3, [(0, 3)])
    assert error.value.vertex == 3
    assert isinstance(error.value, IndexError)
    assert isinstance(error.value, BurningError)


def test_degrees():
    """Degree statistics follow the adjacency lists."""
    graph = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
    assert graph.degree(0) == 3
    assert graph.degree(3) == 1
    assert graph.max_degree == 3
    assert graph.average_degree == pytest.approx(2.0)
    assert Graph.from_edges(0, []).max_degree == 0
    assert Graph.from_edges(0, []).average_degree == 0.0


def test_has_edge_and_neighbours():
    """Adjacency queries check their vertices."""
    graph = path_graph(3)
    assert graph.has_edge(0, 1)
    assert graph.has_edge(1, 0)
    assert not graph.has_edge(0, 2)
    assert graph.neighbours(1) == (0, 2)
    with pytest.raises(VertexOutOfRangeError):
        graph.neighbours(3)
    with pytest.raises(VertexOutOfRangeError):
        graph.has_edge(0, -1)


def test_check_not_empty():
    """The empty graph is rejected where vertices are required."""
    with pytest.raises(EmptyGraphError):
        Graph.from_edges(0, []).check_not_empty()
    Graph.from_edges(1, []).check_not_empty()


def test_induced_subgraph_relabels_kept_vertices():
    """G[X] keeps the edges inside X, relabelled in sorted order."""
    graph = cycle_graph(6)
    subgraph, kept = graph.induced_subgraph([5, 0, 1, 3])
    assert kept == [0, 1, 3, 5]
    assert list(subgraph.edges()) == [(0, 1), (0, 3)]


def test_networkx_round_trip():
    """Conversions to and from networkx preserve the graph."""
    graph = complete_graph(5)
    converted = graph.to_networkx()
    assert converted.number_of_nodes() == 5
    assert converted.number_of_edges() == 10
    assert Graph.from_networkx(converted) == graph


def test_from_networkx_relabels_densely():
    """Sortable node labels are mapped to 0..n-1 in sorted order."""
    graph = Graph.from_networkx(nx.Graph([(10, 20), (20, 30)]), name="relabelled")
    assert graph == path_graph(3)
    assert graph.name == "relabelled"


def test_equality_ignores_names():
    """Graphs compare and hash by structure."""
    first = Graph.from_edges(3, [(0, 1), (1, 2)], name="a")
    second = Graph.from_edges(3, [(1, 2), (0, 1)], name="b")
    assert first == second
    assert hash(first) == hash(second)
    assert first != cycle_graph(3)
    assert "n=3" in repr(first)


def test_constructor_asserts_simple_graph():
    """The raw constructor refuses self-loops."""
    with pytest.raises(AssertionError):
        Graph([[0]])
