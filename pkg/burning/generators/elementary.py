"""Submodule providing paths, cycles and complete graphs."""

from burning.graph import Graph


def path_graph(vertex_count: int) -> Graph:
    """Return the path P_n on vertices 0..n-1 in order."""
    assert vertex_count >= 1, f"Invalid path size: {vertex_count}"
    return Graph.from_edges(
        vertex_count,
        ((vertex, vertex + 1) for vertex in range(vertex_count - 1)),
        name=f"path{vertex_count}",
    )


def cycle_graph(vertex_count: int) -> Graph:
    """Return the cycle C_n on vertices 0..n-1 in order."""
    assert vertex_count >= 3, f"Invalid cycle size: {vertex_count}"
    return Graph.from_edges(
        vertex_count,
        ((vertex, (vertex + 1) % vertex_count) for vertex in range(vertex_count)),
        name=f"cycle{vertex_count}",
    )


def complete_graph(vertex_count: int) -> Graph:
    """Return the complete graph K_n."""
    assert vertex_count >= 1, f"Invalid clique size: {vertex_count}"
    return Graph.from_edges(
        vertex_count,
        (
            (source, destination)
            for source in range(vertex_count)
            for destination in range(source + 1, vertex_count)
        ),
        name=f"complete{vertex_count}",
    )


def gen_elementary(kind: str, vertex_count: int) -> Graph:
    """Return the elementary graph of the given kind: path, cycle or complete."""
    builders = {
        "path": path_graph,
        "cycle": cycle_graph,
        "complete": complete_graph,
    }
    if kind not in builders:
        raise ValueError(
            f"Elementary graph {kind} not found. Available kinds are {list(builders)}."
        )
    return builders[kind](vertex_count)
