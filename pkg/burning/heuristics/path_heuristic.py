"""Submodule providing the DFS-path and D-BFS-path heuristics.

Both burn a long path of the graph in the optimal path order and fall
back to random unburned activators once the path schedule is exhausted.
"""

from math import isqrt
from time import perf_counter
from typing import List, Optional, Sequence
import numpy as np
from burning.graph import Graph
from burning.traversal import check_connected, dfs_long_path, double_bfs_path, is_simple_path
from burning.burn_model import advance_round, initial_state
from burning.exceptions import NotAPathError
from burning.heuristics.heuristic import Heuristic, HeuristicId, HeuristicRun

DFS_SWEEPS: int = 32


def path_burning_completion(vertex_count: int) -> int:
    """Return ceil(sqrt(L)), the burning number of a path on L vertices."""
    assert vertex_count >= 1, f"Invalid path size: {vertex_count}"
    return isqrt(vertex_count - 1) + 1


def path_burning_schedule(path: Sequence[int], graph: Optional[Graph] = None) -> List[int]:
    """Return the activators burning the path in ceil(sqrt(L)) rounds.

    With b = ceil(sqrt(L)), activator i is the center of a segment of
    2(b - i) + 1 vertices. Segments are laid out from the end of the path
    towards its start, so only the first segment is clamped and every
    round keeps an activator. Laying them out from the start instead
    clamps the last segments, which may then hold no vertex at all; on
    L = 2 that would leave the second round without an activator.
    """
    if len(path) == 0 or len(set(path)) != len(path):
        raise NotAPathError(f"Not a simple path: {list(path)}")
    if graph is not None and not is_simple_path(graph, list(path)):
        raise NotAPathError(f"Not a path of graph {graph.name or ''}: {list(path)}")

    rounds = path_burning_completion(len(path))
    schedule: List[int] = []
    end = len(path)
    for activator_round in range(rounds, 0, -1):
        start = max(0, end - 2 * (rounds - activator_round) - 1)
        assert start < end, f"Empty segment for round {activator_round}."
        schedule.append(path[(start + end - 1) // 2])
        end = start
    schedule.reverse()
    return schedule


def run_path_heuristic(
    graph: Graph,
    heuristic: HeuristicId,
    seed: int,
    start: Optional[int] = None,
) -> HeuristicRun:
    """Return the run of DFS-path or D-BFS-path on the connected graph.

    DFS-path keeps the longest path of DFS_SWEEPS DFS trees, each rooted
    at a random leaf of the previous one.
    Scheduled path activators already burned by the time they are due are
    replaced in the same round by a uniformly random unburned vertex, and
    random unburned vertices keep being lit after the schedule ends.
    """
    assert not heuristic.is_selection(), f"{heuristic.value} is not a path heuristic."
    started = perf_counter()
    graph.check_not_empty()
    check_connected(graph)
    rng = np.random.default_rng(seed)

    if heuristic is HeuristicId.DFS_PATH:
        path = dfs_long_path(graph, rng, start=start, sweeps=DFS_SWEEPS)
    else:
        path = double_bfs_path(graph, rng, start=start)
    schedule = path_burning_schedule(path)

    state = initial_state(graph, schedule[0])
    while not state.is_complete():
        assert (
            state.round < graph.vertex_count
        ), f"{heuristic.value} exceeded {graph.vertex_count} rounds."
        next_round = state.round + 1
        chosen: Optional[int] = None
        if next_round <= len(schedule) and state.burn_time[schedule[next_round - 1]] > next_round:
            chosen = schedule[next_round - 1]
        else:
            # Vertices still unburned after this round's spread.
            candidates = np.flatnonzero(state.burn_time > next_round)
            if len(candidates) > 0:
                chosen = int(candidates[rng.integers(len(candidates))])
        state = advance_round(graph, state, chosen)

    return HeuristicRun(
        heuristic=heuristic,
        seed=seed,
        sequence=state.into_sequence(),
        wall_time=perf_counter() - started,
    )


class PathHeuristic(Heuristic):
    """Heuristic burning a long path of the graph first."""

    def __init__(self, heuristic: HeuristicId):
        """Initialize the path heuristic."""
        assert not heuristic.is_selection(), f"{heuristic.value} is not a path heuristic."
        self._heuristic: HeuristicId = heuristic

    def heuristic_id(self) -> HeuristicId:
        """Return the identifier of the heuristic."""
        return self._heuristic

    def run(self, graph: Graph, seed: int) -> HeuristicRun:
        """Return a burning sequence of the connected graph."""
        return run_path_heuristic(graph, self._heuristic, seed=seed)
