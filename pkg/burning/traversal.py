"""Submodule providing the traversal primitives: BFS distances, metrics and long paths."""

from collections import deque
from dataclasses import dataclass
from typing import List, Optional, Tuple
import numpy as np
from burning.graph import Graph
from burning.exceptions import DisconnectedGraphError

UNREACHABLE: int = -1


@dataclass(frozen=True)
class DistanceRow:
    """Hop distances from a source vertex, UNREACHABLE for other components."""

    source: int
    dist: np.ndarray

    def reachable(self) -> np.ndarray:
        """Return the mask of vertices reachable from the source."""
        return self.dist != UNREACHABLE

    def farthest(self) -> int:
        """Return the reachable vertex farthest from the source, smallest id on ties."""
        return int(np.argmax(self.dist))


@dataclass(frozen=True)
class GraphMetrics:
    """Eccentricity based metrics of a connected graph."""

    eccentricity: np.ndarray
    radius: int
    diameter: int
    center: Tuple[int, ...]


def _bfs(graph: Graph, source: int) -> Tuple[List[int], List[int]]:
    """Return distances and BFS parents from the source, neighbours in sorted order."""
    adjacency = graph.adjacency
    dist = [UNREACHABLE] * graph.vertex_count
    parent = [UNREACHABLE] * graph.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        vertex = queue.popleft()
        next_distance = dist[vertex] + 1
        for neighbour in adjacency[vertex]:
            if dist[neighbour] == UNREACHABLE:
                dist[neighbour] = next_distance
                parent[neighbour] = vertex
                queue.append(neighbour)
    return dist, parent


def bfs_distances(graph: Graph, source: int) -> DistanceRow:
    """Return the exact hop distances from the source vertex."""
    graph.check_vertex(source)
    dist, _ = _bfs(graph, source)
    return DistanceRow(source=source, dist=np.array(dist, dtype=np.int64))


def kth_neighborhood(graph: Graph, vertex: int, k: int) -> List[int]:
    """Return the closed k-th neighbourhood N_k[v] as a sorted vertex list."""
    assert k >= 0, f"Invalid neighbourhood radius: {k}"
    row = bfs_distances(graph, vertex)
    return np.flatnonzero(row.reachable() & (row.dist <= k)).tolist()


def kth_neighborhood_size(graph: Graph, vertex: int, k: int) -> int:
    """Return |N_k[v]|, the number of vertices within distance k, v included."""
    return len(kth_neighborhood(graph, vertex, k))


def is_connected(graph: Graph) -> bool:
    """Return whether one BFS from vertex 0 reaches every vertex."""
    if graph.vertex_count == 0:
        return True
    dist, _ = _bfs(graph, 0)
    return UNREACHABLE not in dist


def check_connected(graph: Graph) -> None:
    """Raise DisconnectedGraphError unless the graph is connected."""
    if not is_connected(graph):
        raise DisconnectedGraphError(
            f"Graph {graph.name or ''} with {graph.vertex_count} vertices is not connected."
        )


def metrics(graph: Graph) -> GraphMetrics:
    """Return eccentricities, radius, diameter and center via one BFS per vertex.

    The result is cached on the graph, which is immutable.
    """
    if graph._metrics is not None:
        return graph._metrics
    graph.check_not_empty()
    check_connected(graph)
    eccentricity = np.array(
        [max(_bfs(graph, source)[0]) for source in range(graph.vertex_count)],
        dtype=np.int64,
    )
    radius = int(eccentricity.min())
    result = GraphMetrics(
        eccentricity=eccentricity,
        radius=radius,
        diameter=int(eccentricity.max()),
        center=tuple(np.flatnonzero(eccentricity == radius).tolist()),
    )
    graph._metrics = result
    return result


def _path_to(parent: List[int], destination: int) -> List[int]:
    """Return the parent-chain path from the BFS or DFS root to the destination."""
    path = [destination]
    while parent[path[-1]] != UNREACHABLE:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def double_bfs_path(
    graph: Graph, rng: np.random.Generator, start: Optional[int] = None
) -> List[int]:
    """Return a long shortest path found with two BFS sweeps.

    The first sweep starts at a random vertex (or `start`) and reaches the
    farthest vertex a, a leaf of the BFS tree. The second sweep from a
    reaches the farthest vertex b, and the a-b shortest path is read from
    the BFS parents. Its length is at least half the diameter.
    """
    graph.check_not_empty()
    check_connected(graph)
    if start is None:
        start = int(rng.integers(graph.vertex_count))
    graph.check_vertex(start)
    first, _ = _bfs(graph, start)
    leaf = int(np.argmax(first))
    second, parent = _bfs(graph, leaf)
    farthest = int(np.argmax(second))
    return _path_to(parent, farthest)


def _dfs_tree_path(
    graph: Graph, rng: np.random.Generator, root: int, join_root_branches: bool
) -> Tuple[List[int], List[int]]:
    """Return the long path of one randomized DFS tree and the leaves of the tree."""
    adjacency = graph.adjacency
    parent = [UNREACHABLE] * graph.vertex_count
    depth = [UNREACHABLE] * graph.vertex_count
    branch = [UNREACHABLE] * graph.vertex_count
    depth[root] = 0
    stack = [(root, iter(rng.permutation(adjacency[root]).tolist()))]
    while stack:
        vertex, neighbours = stack[-1]
        for neighbour in neighbours:
            if depth[neighbour] == UNREACHABLE:
                parent[neighbour] = vertex
                depth[neighbour] = depth[vertex] + 1
                branch[neighbour] = neighbour if vertex == root else branch[vertex]
                stack.append(
                    (neighbour, iter(rng.permutation(adjacency[neighbour]).tolist()))
                )
                break
        else:
            stack.pop()

    parents = set(parent)
    leaves = [
        vertex for vertex in range(graph.vertex_count) if vertex != root and vertex not in parents
    ]
    depths = np.array(depth, dtype=np.int64)
    deepest = int(np.argmax(depths))
    path = _path_to(parent, deepest)
    if not join_root_branches or deepest == root:
        return path, leaves

    branches = np.array(branch, dtype=np.int64)
    other = np.flatnonzero((branches != branch[deepest]) & (branches != UNREACHABLE))
    if len(other) == 0:
        return path, leaves
    other_deepest = int(other[np.argmax(depths[other])])
    other_path = _path_to(parent, other_deepest)
    # other_path runs root -> other_deepest; reverse it and drop the shared root.
    return other_path[::-1] + path[1:], leaves


def dfs_long_path(
    graph: Graph,
    rng: np.random.Generator,
    start: Optional[int] = None,
    join_root_branches: bool = True,
    sweeps: int = 1,
) -> List[int]:
    """Return a long path of the DFS tree rooted at a random vertex.

    Neighbours are explored in rng-shuffled order. The deepest vertex of
    the tree (smallest id on ties) gives the root-to-deepest path. When
    `join_root_branches` is set, the deepest vertex lying in a different
    subtree of the root is prepended, so the path runs from one root
    subtree through the root into another.

    With more than one sweep, every further DFS is rooted at a uniformly
    random leaf of the previous tree and the longest path is kept, the
    first one on ties. Sweeps stop early once a path visits every vertex.
    """
    graph.check_not_empty()
    check_connected(graph)
    if sweeps < 1:
        raise ValueError(f"Invalid number of DFS sweeps: {sweeps}")
    if start is None:
        start = int(rng.integers(graph.vertex_count))
    graph.check_vertex(start)

    best, leaves = _dfs_tree_path(graph, rng, start, join_root_branches)
    for _ in range(sweeps - 1):
        if len(best) == graph.vertex_count or len(leaves) == 0:
            break
        root = leaves[int(rng.integers(len(leaves)))]
        path, leaves = _dfs_tree_path(graph, rng, root, join_root_branches)
        if len(path) > len(best):
            best = path
    return best


def is_simple_path(graph: Graph, path: List[int]) -> bool:
    """Return whether the vertices form a simple path of the graph."""
    if len(path) == 0 or len(set(path)) != len(path):
        return False
    for vertex in path:
        if not 0 <= vertex < graph.vertex_count:
            return False
    return all(graph.has_edge(u, v) for u, v in zip(path, path[1:]))
