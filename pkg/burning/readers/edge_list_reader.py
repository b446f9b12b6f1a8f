"""Submodule providing the plain edge list format.

The format is an optional "n <vertex count>" header followed by one
"u v" line per edge, 0-based with u < v, sorted.
"""

from typing import List, Optional, Tuple
from burning.graph import Graph
from burning.exceptions import GraphFormatError
from burning.readers.graph_reader import GraphReader


class EdgeListReader(GraphReader):
    """Reader of the plain 0-based edge list format."""

    def format_name(self) -> str:
        """Return the name of the file format."""
        return "edge list"

    def parse(self, text: str, name: Optional[str] = None) -> Graph:
        """Return the graph described by the edge list text."""
        vertex_count: Optional[int] = None
        edges: List[Tuple[int, int]] = []
        for line_number, line in self._lines(text):
            if line.startswith("#"):
                continue
            tokens = line.split()
            if tokens[0] == "n":
                if vertex_count is not None or len(edges) > 0 or len(tokens) != 2:
                    raise GraphFormatError(f"Misplaced header {line!r}", line_number)
                if not tokens[1].isdigit():
                    raise GraphFormatError(f"Malformed header {line!r}", line_number)
                vertex_count = int(tokens[1])
                continue
            try:
                source, destination = int(tokens[0]), int(tokens[1])
            except (IndexError, ValueError) as error:
                raise GraphFormatError(f"Malformed edge {line!r}", line_number) from error
            if source < 0 or destination < 0 or (
                vertex_count is not None and max(source, destination) >= vertex_count
            ):
                raise GraphFormatError(f"Vertex out of range in {line!r}", line_number)
            edges.append((source, destination))

        if vertex_count is None:
            vertex_count = 1 + max((max(edge) for edge in edges), default=-1)
        return Graph.from_edges(vertex_count, edges, name=name)


def parse_edge_list(text: str, name: Optional[str] = None) -> Graph:
    """Return the graph described by edge list text."""
    return EdgeListReader().parse(text, name=name)


def write_edge_list(graph: Graph) -> str:
    """Return the sorted 0-based edges of the graph, one "u v" pair per line.

    The "n <n>" header is written only when the edges alone would not give
    back the vertex count, i.e. when the last vertices are isolated.
    """
    lines: List[str] = []
    if 1 + max((max(edge) for edge in graph.edges()), default=-1) != graph.vertex_count:
        lines.append(f"n {graph.vertex_count}")
    lines.extend(f"{source} {destination}" for source, destination in graph.edges())
    return "\n".join(lines) + "\n"
