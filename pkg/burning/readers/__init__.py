"""Submodule providing readers and writers for graph files."""

import os
from burning.graph import Graph
from burning.readers.graph_reader import GraphReader
from burning.readers.dimacs_reader import DIMACSReader, parse_dimacs
from burning.readers.matrix_market_reader import MatrixMarketReader, parse_mtx
from burning.readers.edge_list_reader import EdgeListReader, parse_edge_list, write_edge_list

READERS = {
    ".clq": DIMACSReader,
    ".col": DIMACSReader,
    ".dimacs": DIMACSReader,
    ".mtx": MatrixMarketReader,
    ".edges": EdgeListReader,
    ".el": EdgeListReader,
    ".txt": EdgeListReader,
}


def read_graph(path: str, verbose: bool = False) -> Graph:
    """Return the graph stored in the file, the format chosen by its suffix."""
    suffix = os.path.splitext(path)[1].lower()
    if suffix not in READERS:
        raise ValueError(
            f"Unknown graph file suffix {suffix!r} for {path}. "
            f"Available suffixes are {sorted(READERS)}."
        )
    return READERS[suffix](verbose=verbose).read(path)


__all__ = [
    "GraphReader",
    "DIMACSReader",
    "MatrixMarketReader",
    "EdgeListReader",
    "parse_dimacs",
    "parse_mtx",
    "parse_edge_list",
    "write_edge_list",
    "read_graph",
    "READERS",
]
