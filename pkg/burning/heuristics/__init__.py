"""Submodule providing the six burning heuristics."""

from burning.graph import Graph
from burning.heuristics.heuristic import Heuristic, HeuristicId, HeuristicRun
from burning.heuristics.selection_heuristic import (
    SelectionHeuristic,
    first_activator_center,
    first_activator_random,
    next_activator_far,
    next_activator_half,
    run_selection_heuristic,
)
from burning.heuristics.path_heuristic import (
    PathHeuristic,
    path_burning_completion,
    path_burning_schedule,
    run_path_heuristic,
)


def get_heuristic(heuristic: HeuristicId, far_minus_one: bool = False) -> Heuristic:
    """Return the heuristic implementation for the given identifier."""
    if heuristic.is_selection():
        return SelectionHeuristic(heuristic, far_minus_one=far_minus_one)
    return PathHeuristic(heuristic)


def run_heuristic(
    graph: Graph, heuristic: HeuristicId, seed: int, far_minus_one: bool = False
) -> HeuristicRun:
    """Run the given heuristic on the connected graph."""
    return get_heuristic(heuristic, far_minus_one=far_minus_one).run(graph, seed)


__all__ = [
    "Heuristic",
    "HeuristicId",
    "HeuristicRun",
    "SelectionHeuristic",
    "PathHeuristic",
    "get_heuristic",
    "run_heuristic",
    "first_activator_center",
    "first_activator_random",
    "next_activator_half",
    "next_activator_far",
    "run_selection_heuristic",
    "path_burning_completion",
    "path_burning_schedule",
    "run_path_heuristic",
]
