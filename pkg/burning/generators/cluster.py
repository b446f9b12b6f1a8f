"""Submodule providing the random graphs with a known distance to cluster.

A path P_d is joined to k cliques; clique i of random size n_i receives
a_i edges, 1 <= a_i < n_i - 1, towards random path vertices from a_i
distinct clique vertices. Deleting the d path vertices leaves the cliques.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Tuple
import numpy as np
from burning.graph import Graph
from burning.generators.instance import Instance
from burning.generators.naming import cluster_name


@dataclass(frozen=True)
class ClusterSpec:
    """Parameters of one random graph with a path modulator."""

    clique_count: int
    size_min: int
    size_max: int
    path_vertices: int
    seed: int
    sample: int = 0

    def __post_init__(self):
        """Check the ranges."""
        if self.clique_count < 1:
            raise ValueError(f"At least one clique is required, got {self.clique_count}.")
        if self.size_min < 3:
            raise ValueError(f"Cliques need at least 3 vertices, got {self.size_min}.")
        if self.size_max < self.size_min:
            raise ValueError(f"Invalid clique size range [{self.size_min}, {self.size_max}].")
        if self.path_vertices < 1:
            raise ValueError(f"The path needs at least 1 vertex, got {self.path_vertices}.")

    def into_dict(self) -> Dict[str, Any]:
        """Return the spec as a dictionary."""
        return {
            "family": "cluster",
            "k": self.clique_count,
            "size_min": self.size_min,
            "size_max": self.size_max,
            "d": self.path_vertices,
            "seed": self.seed,
            "sample": self.sample,
        }


def gen_cluster(spec: ClusterSpec) -> Instance:
    """Return the cluster instance described by the spec, the path as modulator."""
    rng = np.random.default_rng(spec.seed)
    path_vertices = spec.path_vertices
    edges: List[Tuple[int, int]] = [(vertex, vertex + 1) for vertex in range(path_vertices - 1)]

    sizes = rng.integers(spec.size_min, spec.size_max + 1, size=spec.clique_count)
    attachments: List[int] = []
    offset = path_vertices
    for size in (int(size) for size in sizes):
        clique = range(offset, offset + size)
        edges.extend(
            (clique[source], clique[destination])
            for source in range(size)
            for destination in range(source + 1, size)
        )
        attachment_count = int(rng.integers(1, size - 1))
        clique_ends = rng.choice(size, size=attachment_count, replace=False)
        path_ends = rng.integers(path_vertices, size=attachment_count)
        edges.extend(
            (int(path_end), clique[int(clique_end)])
            for path_end, clique_end in zip(path_ends, clique_ends)
        )
        attachments.append(attachment_count)
        offset += size

    name = cluster_name(
        spec.clique_count,
        spec.size_min,
        spec.size_max,
        path_vertices,
        offset,
        spec.sample,
    )
    metadata = spec.into_dict()
    metadata["n"] = offset
    metadata["clique_sizes"] = [int(size) for size in sizes]
    metadata["attachments"] = attachments
    modulator = tuple(range(path_vertices))
    metadata["modulator"] = list(modulator)
    return Instance(
        name=name,
        graph=Graph.from_edges(offset, edges, name=name),
        metadata=metadata,
        modulator=modulator,
    )
