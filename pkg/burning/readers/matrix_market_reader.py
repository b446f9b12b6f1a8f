"""Submodule providing a reader for Matrix Market coordinate pattern files."""

import logging
from typing import List, Optional, Tuple
from burning.graph import Graph
from burning.exceptions import GraphFormatError
from burning.readers.graph_reader import GraphReader
from burning.readers.dimacs_reader import _parse_pair

logger = logging.getLogger(__name__)


class MatrixMarketReader(GraphReader):
    """Reader of symmetric pattern matrices, the Network Repository format."""

    def format_name(self) -> str:
        """Return the name of the file format."""
        return "Matrix Market"

    def parse(self, text: str, name: Optional[str] = None) -> Graph:
        """Return the undirected graph whose adjacency pattern the text stores."""
        lines = self._lines(text)
        try:
            line_number, header = next(lines)
        except StopIteration as error:
            raise GraphFormatError("Empty Matrix Market file") from error

        tokens = header.lower().split()
        if len(tokens) != 5 or tokens[0] != "%%matrixmarket":
            raise GraphFormatError(f"Invalid Matrix Market header {header!r}", line_number)
        if tokens[1:4] != ["matrix", "coordinate", "pattern"]:
            raise GraphFormatError(f"Only coordinate pattern matrices are supported, got {header!r}", line_number)
        if tokens[4] != "symmetric":
            raise GraphFormatError(f"Only symmetric matrices are supported, got {header!r}", line_number)

        size: Optional[Tuple[int, int, int]] = None
        edges: List[Tuple[int, int]] = []
        for line_number, line in lines:
            if line.startswith("%"):
                continue
            if size is None:
                try:
                    rows, columns, entries = (int(token) for token in line.split())
                except ValueError as error:
                    raise GraphFormatError(f"Malformed size line {line!r}", line_number) from error
                if rows != columns:
                    raise GraphFormatError(f"Non-square matrix {rows}x{columns}", line_number)
                size = (rows, columns, entries)
                continue
            edges.append(_parse_pair(line.split(), line_number, size[0]))

        if size is None:
            raise GraphFormatError("Missing size line \"rows cols nnz\"")
        if len(edges) != size[2]:
            raise GraphFormatError(f"Declared {size[2]} entries but read {len(edges)}")

        diagonal = sum(1 for source, destination in edges if source == destination)
        if diagonal > 0:
            logger.warning("Dropped %d diagonal entries in %s.", diagonal, name)
        return Graph.from_edges(
            size[0],
            ((source, destination) for source, destination in edges if source != destination),
            name=name,
        )


def parse_mtx(text: str, name: Optional[str] = None) -> Graph:
    """Return the graph described by Matrix Market text."""
    return MatrixMarketReader().parse(text, name=name)
