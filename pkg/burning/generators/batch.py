"""Submodule providing seeded batches of generated instances.

Every instance draws its parameters and its generator seed from a stream
derived from the master seed and the instance index alone, so a batch is
identical whatever order or worker produces its instances.
"""

from dataclasses import dataclass
from typing import Any, Dict, Iterator, Union
import numpy as np
from tqdm.auto import tqdm
from burning.generators.instance import Instance
from burning.generators.theta import ThetaSpec, gen_theta
from burning.generators.cluster import ClusterSpec, gen_cluster


def derive_seed(master_seed: int, *keys: int) -> int:
    """Return a non-negative 53-bit seed derived from the master seed and keys.

    53 bits keep the seed exact in float columns of result tables.
    """
    state = np.random.SeedSequence(entropy=master_seed, spawn_key=tuple(keys)).generate_state(
        1, dtype=np.uint64
    )
    return int(state[0]) >> 11


@dataclass(frozen=True)
class ThetaRange:
    """Range of theta graph orders; m is uniform in [3, n - 1] and l = n - m."""

    n_min: int
    n_max: int

    def __post_init__(self):
        """Check the range."""
        if self.n_min < 4 or self.n_max < self.n_min:
            raise ValueError(f"Invalid theta order range [{self.n_min}, {self.n_max}].")

    def spec_at(self, index: int, master_seed: int) -> ThetaSpec:
        """Return the spec of the index-th instance of the batch."""
        rng = np.random.default_rng(derive_seed(master_seed, index, 0))
        vertex_count = int(rng.integers(self.n_min, self.n_max + 1))
        cycle_size = int(rng.integers(3, vertex_count))
        return ThetaSpec(
            cycle_size=cycle_size,
            path_internal=vertex_count - cycle_size,
            seed=derive_seed(master_seed, index, 1),
            sample=index,
        )

    def into_dict(self) -> Dict[str, Any]:
        """Return the range as a dictionary."""
        return {"family": "theta", "n_min": self.n_min, "n_max": self.n_max}


@dataclass(frozen=True)
class ClusterRange:
    """Ranges of clique count, clique size and path size."""

    k_min: int
    k_max: int
    size_min: int
    size_max: int
    d_min: int
    d_max: int

    def __post_init__(self):
        """Check the ranges."""
        if self.k_min < 1 or self.k_max < self.k_min:
            raise ValueError(f"Invalid clique count range [{self.k_min}, {self.k_max}].")
        if self.size_min < 3 or self.size_max < self.size_min:
            raise ValueError(f"Invalid clique size range [{self.size_min}, {self.size_max}].")
        if self.d_min < 1 or self.d_max < self.d_min:
            raise ValueError(f"Invalid path size range [{self.d_min}, {self.d_max}].")

    def spec_at(self, index: int, master_seed: int) -> ClusterSpec:
        """Return the spec of the index-th instance of the batch."""
        rng = np.random.default_rng(derive_seed(master_seed, index, 0))
        return ClusterSpec(
            clique_count=int(rng.integers(self.k_min, self.k_max + 1)),
            size_min=self.size_min,
            size_max=self.size_max,
            path_vertices=int(rng.integers(self.d_min, self.d_max + 1)),
            seed=derive_seed(master_seed, index, 1),
            sample=index,
        )

    def into_dict(self) -> Dict[str, Any]:
        """Return the ranges as a dictionary."""
        return {
            "family": "cluster",
            "k_min": self.k_min,
            "k_max": self.k_max,
            "size_min": self.size_min,
            "size_max": self.size_max,
            "d_min": self.d_min,
            "d_max": self.d_max,
        }


FamilyRange = Union[ThetaRange, ClusterRange]
GeneratorSpec = Union[ThetaSpec, ClusterSpec]


def generate(spec: GeneratorSpec) -> Instance:
    """Return the instance described by a theta or cluster spec."""
    if isinstance(spec, ThetaSpec):
        return gen_theta(spec)
    if isinstance(spec, ClusterSpec):
        return gen_cluster(spec)
    raise ValueError(f"Unknown generator spec: {spec!r}")


def gen_batch(
    family: FamilyRange,
    count: int,
    master_seed: int,
    verbose: bool = False,
) -> Iterator[Instance]:
    """Yield `count` instances of the family derived from the master seed."""
    assert count >= 0, f"Invalid instance count: {count}"
    for index in tqdm(
        range(count),
        desc=f"Generating {family.into_dict()['family']} instances",
        disable=not verbose,
        leave=False,
        dynamic_ncols=True,
    ):
        yield generate(family.spec_at(index, master_seed))
