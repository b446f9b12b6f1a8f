"""Tests for the DIMACS, Matrix Market and edge list formats."""

import logging
import pytest
from burning.graph import Graph
from burning.exceptions import GraphFormatError
from burning.generators import complete_graph, path_graph
from burning.readers import (
    parse_dimacs,
    parse_edge_list,
    parse_mtx,
    read_graph,
    write_edge_list,
)

TRIANGLE_DIMACS = "c a triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n"
PATH_MTX = (
    "%%MatrixMarket matrix coordinate pattern symmetric\n"
    "% a path on three vertices\n"
    "3 3 2\n"
    "2 1\n"
    "3 2\n"
)


def test_dimacs_examples():
    """DIMACS ids are 1-based."""
    assert parse_dimacs(TRIANGLE_DIMACS) == complete_graph(3)
    assert parse_dimacs("p edge 3 2\ne 1 2\ne 2 3\n", name="P3") == path_graph(3)
    assert parse_dimacs("p edge 1 0\n").vertex_count == 1
    assert parse_dimacs(TRIANGLE_DIMACS.replace("\n", "\r\n")) == complete_graph(3)


def test_dimacs_both_directions(caplog):
    """Files listing each edge twice are accepted."""
    with caplog.at_level(logging.WARNING):
        graph = parse_dimacs("p edge 2 2\ne 1 2\ne 2 1\n")
    assert graph.edge_count == 1
    assert "duplicate" in caplog.text


def test_dimacs_errors():
    """Malformed DIMACS files name the offending line."""
    with pytest.raises(GraphFormatError, match="Missing problem line"):
        parse_dimacs("c nothing\n")
    with pytest.raises(GraphFormatError) as error:
        parse_dimacs("p edge 2 1\ne 1 3\n")
    assert error.value.line_number == 2
    assert str(error.value).startswith("Line 2: ")
    with pytest.raises(GraphFormatError):
        parse_dimacs("e 1 2\np edge 2 1\n")
    with pytest.raises(GraphFormatError):
        parse_dimacs("p edge 2 1\ne 1 x\n")
    with pytest.raises(GraphFormatError, match="Declared 5 edges"):
        parse_dimacs("p edge 3 5\ne 1 2\ne 2 3\n")


def test_dimacs_unknown_lines_are_skipped(caplog):
    """Unknown line types are counted in a warning."""
    with caplog.at_level(logging.WARNING, logger="burning.readers.dimacs_reader"):
        graph = parse_dimacs("p edge 2 1\nn 1 5\ne 1 2\n", name="weighted")
    assert graph.edge_count == 1
    assert "Skipped 1 DIMACS lines" in caplog.text


def test_mtx_examples(caplog):
    """Symmetric pattern matrices give undirected graphs."""
    assert parse_mtx(PATH_MTX) == path_graph(3)
    with caplog.at_level(logging.WARNING, logger="burning.readers.matrix_market_reader"):
        graph = parse_mtx(
            "%%MatrixMarket matrix coordinate pattern symmetric\n2 2 2\n1 1\n2 1\n"
        )
    assert graph == path_graph(2)
    assert "diagonal" in caplog.text


@pytest.mark.parametrize(
    "text",
    [
        "",
        "%%MatrixMarket matrix array real general\n2 2\n",
        "%%MatrixMarket matrix coordinate real symmetric\n2 2 1\n2 1 0.5\n",
        "%%MatrixMarket matrix coordinate pattern general\n2 2 1\n2 1\n",
        "%%MatrixMarket matrix coordinate pattern symmetric\n2 3 1\n2 1\n",
        "%%MatrixMarket matrix coordinate pattern symmetric\n2 2 2\n2 1\n",
        "%%MatrixMarket matrix coordinate pattern symmetric\n2 2 1\n3 1\n",
        "%%MatrixMarket matrix coordinate pattern symmetric\n% only comments\n",
    ],
)
def test_mtx_errors(text):
    """Unsupported or inconsistent Matrix Market files are refused."""
    with pytest.raises(GraphFormatError):
        parse_mtx(text)


def test_edge_list_examples():
    """0-based pairs, an optional header and comments."""
    assert write_edge_list(path_graph(3)) == "0 1\n1 2\n"
    assert write_edge_list(complete_graph(1)) == "n 1\n"
    assert write_edge_list(Graph.from_edges(4, [(0, 1)])) == "n 4\n0 1\n"
    assert parse_edge_list("# comment\n0 1\n\n1 2\n") == path_graph(3)
    assert parse_edge_list("n 1\n") == complete_graph(1)
    assert parse_edge_list("n 4\n0 1\n").vertex_count == 4


def test_edge_list_round_trip():
    """Written edge lists read back to the same graph."""
    for graph in (path_graph(7), complete_graph(1), Graph.from_edges(5, [(1, 2), (0, 2)])):
        assert parse_edge_list(write_edge_list(graph)) == graph


@pytest.mark.parametrize("text", ["0 1\nn 3\n", "n x\n", "n 2\n0 2\n", "0\n", "0 -1\n"])
def test_edge_list_errors(text):
    """Misplaced headers, malformed pairs and out of range ids are refused."""
    with pytest.raises(GraphFormatError):
        parse_edge_list(text)


def test_read_graph_by_suffix(tmp_path):
    """The reader is chosen by the file suffix and the stem names the graph."""
    (tmp_path / "triangle.clq").write_text(TRIANGLE_DIMACS)
    (tmp_path / "path.mtx").write_text(PATH_MTX)
    (tmp_path / "path.edges").write_text(write_edge_list(path_graph(3)))

    triangle = read_graph(str(tmp_path / "triangle.clq"))
    assert triangle == complete_graph(3)
    assert triangle.name == "triangle"
    assert read_graph(str(tmp_path / "path.mtx")) == path_graph(3)
    assert read_graph(str(tmp_path / "path.edges")).name == "path"


def test_read_graph_unknown_suffix(tmp_path):
    """Unknown suffixes list the supported ones."""
    (tmp_path / "graph.gml").write_text("graph []\n")
    with pytest.raises(ValueError, match="Available suffixes"):
        read_graph(str(tmp_path / "graph.gml"))
