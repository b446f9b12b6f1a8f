"""Submodule providing the random theta graph generator.

A cycle C_m gets two distinct random junction vertices, which a new path
of l internal vertices joins, so the graph has n = m + l vertices.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Tuple
import numpy as np
from burning.graph import Graph
from burning.generators.instance import Instance
from burning.generators.naming import theta_name


@dataclass(frozen=True)
class ThetaSpec:
    """Parameters of one random theta graph."""

    cycle_size: int
    path_internal: int
    seed: int
    sample: int = 0

    def __post_init__(self):
        """Check the sizes."""
        if self.cycle_size < 3:
            raise ValueError(f"The cycle needs at least 3 vertices, got {self.cycle_size}.")
        if self.path_internal < 1:
            raise ValueError(
                f"The joining path needs at least 1 internal vertex, got {self.path_internal}."
            )

    @property
    def vertex_count(self) -> int:
        """Return n = m + l."""
        return self.cycle_size + self.path_internal

    def into_dict(self) -> Dict[str, Any]:
        """Return the spec as a dictionary."""
        return {
            "family": "theta",
            "m": self.cycle_size,
            "l": self.path_internal,
            "n": self.vertex_count,
            "seed": self.seed,
            "sample": self.sample,
        }


def gen_theta(spec: ThetaSpec) -> Instance:
    """Return the theta graph described by the spec."""
    rng = np.random.default_rng(spec.seed)
    cycle_size = spec.cycle_size
    first, second = (int(vertex) for vertex in rng.choice(cycle_size, size=2, replace=False))

    edges: List[Tuple[int, int]] = [
        (vertex, (vertex + 1) % cycle_size) for vertex in range(cycle_size)
    ]
    chain = [first] + list(range(cycle_size, spec.vertex_count)) + [second]
    edges.extend(zip(chain, chain[1:]))

    name = theta_name(spec.vertex_count, spec.sample, cycle_size, spec.path_internal)
    metadata = spec.into_dict()
    metadata["junctions"] = [first, second]
    return Instance(
        name=name,
        graph=Graph.from_edges(spec.vertex_count, edges, name=name),
        metadata=metadata,
    )
