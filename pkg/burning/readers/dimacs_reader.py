"""Submodule providing a reader for DIMACS ascii graph files."""

import logging
from typing import List, Optional, Tuple
from burning.graph import Graph
from burning.exceptions import GraphFormatError
from burning.readers.graph_reader import GraphReader

logger = logging.getLogger(__name__)


def _parse_pair(tokens: List[str], line_number: int, vertex_count: int) -> Tuple[int, int]:
    """Return the 0-based endpoints of a 1-based pair of tokens."""
    try:
        source, destination = int(tokens[0]), int(tokens[1])
    except (IndexError, ValueError) as error:
        raise GraphFormatError(f"Malformed edge {' '.join(tokens)!r}", line_number) from error
    for vertex in (source, destination):
        if not 1 <= vertex <= vertex_count:
            raise GraphFormatError(
                f"Vertex {vertex} out of range 1..{vertex_count}", line_number
            )
    return source - 1, destination - 1


class DIMACSReader(GraphReader):
    """Reader of "c" comment, "p edge <n> <m>" and "e <u> <v>" lines."""

    def format_name(self) -> str:
        """Return the name of the file format."""
        return "DIMACS"

    def parse(self, text: str, name: Optional[str] = None) -> Graph:
        """Return the graph described by the DIMACS text, ids remapped to 0-based."""
        vertex_count: Optional[int] = None
        declared_edges = 0
        edges: List[Tuple[int, int]] = []
        unknown = 0

        for line_number, line in self._lines(text):
            tokens = line.split()
            kind = tokens[0]
            if kind == "c":
                continue
            if kind == "p":
                if vertex_count is not None:
                    raise GraphFormatError("Repeated problem line", line_number)
                try:
                    vertex_count, declared_edges = int(tokens[2]), int(tokens[3])
                except (IndexError, ValueError) as error:
                    raise GraphFormatError(f"Malformed problem line {line!r}", line_number) from error
                continue
            if kind == "e":
                if vertex_count is None:
                    raise GraphFormatError("Edge before the problem line", line_number)
                edges.append(_parse_pair(tokens[1:], line_number, vertex_count))
                continue
            unknown += 1

        if vertex_count is None:
            raise GraphFormatError("Missing problem line \"p edge <n> <m>\"")
        if unknown > 0:
            logger.warning("Skipped %d DIMACS lines of unknown type in %s.", unknown, name)

        graph = Graph.from_edges(vertex_count, edges, name=name)
        # Some files list both directions of each edge.
        if declared_edges not in (len(edges), graph.edge_count, 2 * graph.edge_count):
            raise GraphFormatError(
                f"Declared {declared_edges} edges but read {len(edges)} "
                f"({graph.edge_count} distinct)"
            )
        return graph


def parse_dimacs(text: str, name: Optional[str] = None) -> Graph:
    """Return the graph described by DIMACS text."""
    return DIMACSReader().parse(text, name=name)
