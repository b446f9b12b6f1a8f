"""Submodule providing the Graph class, an immutable undirected simple graph."""

from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple
from bisect import bisect_left
import logging
import networkx as nx
from burning.exceptions import EmptyGraphError, VertexOutOfRangeError

logger = logging.getLogger(__name__)


class Graph:
    """Class representing an immutable undirected simple graph on vertices 0..n-1."""

    def __init__(
        self,
        adjacency: Sequence[Sequence[int]],
        name: Optional[str] = None,
    ):
        """Initialize the Graph class.

        Parameters
        ----------
        adjacency
            Per-vertex neighbor lists. They must already be symmetric,
            free of self-loops and of duplicates; use `Graph.from_edges`
            to build a graph from an arbitrary edge list.
        name
            Optional text label, usually the instance name.
        """
        self._adjacency: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(sorted(neighbours)) for neighbours in adjacency
        )
        self._name: Optional[str] = name
        self._edge_count: int = sum(len(n) for n in self._adjacency) // 2
        # Derived data cached by burning.traversal.metrics.
        self._metrics = None

        for vertex, neighbours in enumerate(self._adjacency):
            for position, neighbour in enumerate(neighbours):
                assert (
                    0 <= neighbour < len(self._adjacency)
                ), f"Neighbour {neighbour} of {vertex} out of range."
                assert neighbour != vertex, f"Self-loop on vertex {vertex}."
                assert (
                    position == 0 or neighbours[position - 1] != neighbour
                ), f"Duplicate neighbour {neighbour} of {vertex}."

    @staticmethod
    def from_edges(
        vertex_count: int,
        edges: Iterable[Tuple[int, int]],
        name: Optional[str] = None,
    ) -> "Graph":
        """Return a graph built from an edge list, dropping loops and duplicates."""
        assert vertex_count >= 0, f"Invalid vertex count: {vertex_count}"
        neighbours: List[set] = [set() for _ in range(vertex_count)]
        self_loops = 0
        duplicates = 0
        for source, destination in edges:
            for vertex in (source, destination):
                if not 0 <= vertex < vertex_count:
                    raise VertexOutOfRangeError(vertex, vertex_count)
            if source == destination:
                self_loops += 1
                continue
            if destination in neighbours[source]:
                duplicates += 1
                continue
            neighbours[source].add(destination)
            neighbours[destination].add(source)

        if self_loops > 0:
            logger.warning("Dropped %d self-loops while building %s.", self_loops, name)
        if duplicates > 0:
            logger.warning("Collapsed %d duplicate edges while building %s.", duplicates, name)

        return Graph(adjacency=neighbours, name=name)

    @staticmethod
    def from_networkx(graph: nx.Graph, name: Optional[str] = None) -> "Graph":
        """Return a graph built from a networkx graph, relabelling nodes densely.

        Nodes are relabelled in their sorted order when they are sortable,
        otherwise in insertion order.
        """
        try:
            nodes = sorted(graph.nodes())
        except TypeError:
            nodes = list(graph.nodes())
        index: Dict = {node: position for position, node in enumerate(nodes)}
        return Graph.from_edges(
            vertex_count=len(nodes),
            edges=((index[u], index[v]) for u, v in graph.edges()),
            name=name if name is not None else graph.graph.get("name") or None,
        )

    def to_networkx(self) -> nx.Graph:
        """Return the graph as a networkx graph."""
        graph = nx.Graph(name=self._name or "")
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(self.edges())
        return graph

    @property
    def name(self) -> Optional[str]:
        """Return the name of the graph."""
        return self._name

    @property
    def vertex_count(self) -> int:
        """Return the number of vertices n."""
        return len(self._adjacency)

    @property
    def edge_count(self) -> int:
        """Return the number of edges m."""
        return self._edge_count

    @property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        """Return the sorted adjacency lists."""
        return self._adjacency

    def check_vertex(self, vertex: int) -> None:
        """Raise VertexOutOfRangeError when the vertex is not in 0..n-1."""
        if not 0 <= vertex < self.vertex_count:
            raise VertexOutOfRangeError(vertex, self.vertex_count)

    def check_not_empty(self) -> None:
        """Raise EmptyGraphError when the graph has no vertices."""
        if self.vertex_count == 0:
            raise EmptyGraphError("The graph has no vertices.")

    def neighbours(self, vertex: int) -> Tuple[int, ...]:
        """Return the sorted neighbours of the given vertex."""
        self.check_vertex(vertex)
        return self._adjacency[vertex]

    def degree(self, vertex: int) -> int:
        """Return the degree of the given vertex."""
        return len(self.neighbours(vertex))

    @property
    def max_degree(self) -> int:
        """Return the maximum degree, 0 for the empty graph."""
        return max((len(n) for n in self._adjacency), default=0)

    @property
    def average_degree(self) -> float:
        """Return the average degree 2m/n, 0 for the empty graph."""
        if self.vertex_count == 0:
            return 0.0
        return 2 * self._edge_count / self.vertex_count

    def has_edge(self, source: int, destination: int) -> bool:
        """Return whether the two vertices are adjacent."""
        neighbours = self.neighbours(source)
        self.check_vertex(destination)
        position = bisect_left(neighbours, destination)
        return position < len(neighbours) and neighbours[position] == destination

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Iterate over the edges (u, v) with u < v in sorted order."""
        for source, neighbours in enumerate(self._adjacency):
            for destination in neighbours:
                if source < destination:
                    yield (source, destination)

    def induced_subgraph(self, vertices: Iterable[int]) -> Tuple["Graph", List[int]]:
        """Return the induced subgraph G[X] and the original id of each new vertex."""
        kept = sorted(set(vertices))
        for vertex in kept:
            self.check_vertex(vertex)
        index = {vertex: position for position, vertex in enumerate(kept)}
        adjacency = [
            [index[neighbour] for neighbour in self._adjacency[vertex] if neighbour in index]
            for vertex in kept
        ]
        return Graph(adjacency=adjacency), kept

    def __eq__(self, other: object) -> bool:
        """Return whether two graphs have the same vertices and edges."""
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adjacency == other._adjacency

    def __hash__(self) -> int:
        """Return the hash of the adjacency structure."""
        return hash(self._adjacency)

    def __len__(self) -> int:
        """Return the number of vertices."""
        return self.vertex_count

    def __repr__(self) -> str:
        """Return the representation of the graph."""
        return f"Graph(name={self._name!r}, n={self.vertex_count}, m={self._edge_count})"
