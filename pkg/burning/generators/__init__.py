"""Submodule providing the random and elementary instance generators."""

from burning.generators.instance import Instance
from burning.generators.naming import cluster_name, parse_instance_name, theta_name
from burning.generators.elementary import (
    complete_graph,
    cycle_graph,
    gen_elementary,
    path_graph,
)
from burning.generators.theta import ThetaSpec, gen_theta
from burning.generators.cluster import ClusterSpec, gen_cluster
from burning.generators.batch import (
    ClusterRange,
    FamilyRange,
    GeneratorSpec,
    ThetaRange,
    derive_seed,
    gen_batch,
    generate,
)

__all__ = [
    "Instance",
    "cluster_name",
    "parse_instance_name",
    "theta_name",
    "complete_graph",
    "cycle_graph",
    "gen_elementary",
    "path_graph",
    "ThetaSpec",
    "gen_theta",
    "ClusterSpec",
    "gen_cluster",
    "ClusterRange",
    "FamilyRange",
    "GeneratorSpec",
    "ThetaRange",
    "derive_seed",
    "gen_batch",
    "generate",
]
