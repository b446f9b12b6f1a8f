"""Package to compute, bound and benchmark burning sequences of graphs."""

from burning.graph import Graph
from burning.burn_model import BurningSequence, burn_times, validate_sequence
from burning.heuristics import HeuristicId, run_heuristic
from burning.oracle import attach_bound, bound_report, exact_bn
from burning.readers import read_graph
from burning.settings import (
    ClusterFamilySettings,
    ExperimentSettings,
    FileInstancesSettings,
    ThetaFamilySettings,
)
from burning.experiment import Experiment

__all__ = [
    "Graph",
    "BurningSequence",
    "burn_times",
    "validate_sequence",
    "HeuristicId",
    "run_heuristic",
    "attach_bound",
    "bound_report",
    "exact_bn",
    "read_graph",
    "ClusterFamilySettings",
    "ExperimentSettings",
    "FileInstancesSettings",
    "ThetaFamilySettings",
    "Experiment",
]
