"""Submodule providing the burning process: burn times, validity and time-to-burn.

Activator x_i is placed at round i (1-based) and a vertex v burns at round
min_i (i + d(v, x_i)). A sequence is valid for k rounds when every vertex
burns by round k and the activators respect the spacing condition
d(x_i, x_j) >= j - i for i < j, i.e. no activator is burned before the
round it is placed in.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple
import numpy as np
from burning.graph import Graph
from burning.traversal import UNREACHABLE, _bfs, check_connected
from burning.exceptions import (
    AlreadyBurnedError,
    DuplicateActivatorError,
    EmptyGraphError,
)


@dataclass(frozen=True)
class BurningSequence:
    """Ordered activators and the round at which the whole graph is burned."""

    activators: Tuple[int, ...]
    completion_time: int

    def __post_init__(self):
        """Check the sequence invariants."""
        assert len(set(self.activators)) == len(
            self.activators
        ), f"Repeated activator in {self.activators}."
        assert self.completion_time >= len(
            self.activators
        ), f"Completion {self.completion_time} before the last activator."

    def __len__(self) -> int:
        """Return the reported burning sequence length, the completion time."""
        return self.completion_time


@dataclass(frozen=True)
class BurnState:
    """State of the burning process at the end of a round.

    `burn_time` holds for every vertex the round at which it burns if no
    further activator is placed; vertices with burn_time <= round are burned.
    """

    round: int
    burn_time: np.ndarray
    activators: Tuple[int, ...]

    def is_complete(self) -> bool:
        """Return whether every vertex is burned."""
        return bool((self.burn_time <= self.round).all())

    @property
    def completion_time(self) -> int:
        """Return the round at which the last vertex burns."""
        return int(self.burn_time.max())

    def into_sequence(self) -> BurningSequence:
        """Return the activators placed so far with their completion time."""
        return BurningSequence(
            activators=self.activators,
            completion_time=self.completion_time,
        )


@dataclass(frozen=True)
class TimeToBurnField:
    """Time-to-burn t^k(v) of every unburned vertex at round k."""

    vertices: np.ndarray
    values: np.ndarray
    maximum: int

    def as_dict(self) -> Dict[int, int]:
        """Return the field as a vertex to time-to-burn dictionary."""
        return dict(zip(self.vertices.tolist(), self.values.tolist()))


@dataclass(frozen=True)
class SequenceValidation:
    """Outcome of validate_sequence with every violated vertex and pair."""

    valid: bool
    rounds: int
    uncovered: List[int] = field(default_factory=list)
    spacing_violations: List[Tuple[int, int]] = field(default_factory=list)

    def __bool__(self) -> bool:
        """Return whether the sequence is valid."""
        return self.valid

    def report(self) -> List[str]:
        """Return a human readable line per violation."""
        lines = [
            f"vertex {vertex} not burned by round {self.rounds}"
            for vertex in self.uncovered
        ]
        lines.extend(
            f"activators x_{i} and x_{j} too close for rounds {i} and {j}"
            for i, j in self.spacing_violations
        )
        return lines


def _check_activators(graph: Graph, activators: Sequence[int]) -> None:
    """Raise when the activators are empty, out of range or repeated."""
    if len(activators) == 0:
        raise EmptyGraphError("At least one activator is required.")
    seen = set()
    for activator in activators:
        graph.check_vertex(activator)
        if activator in seen:
            raise DuplicateActivatorError(f"Activator {activator} appears twice.")
        seen.add(activator)


def _propagate(graph: Graph, activators: Sequence[int]) -> List[int]:
    """Return burn rounds via a multi-source BFS where x_i enters at round i.

    Vertices the fire never reaches keep UNREACHABLE.
    """
    adjacency = graph.adjacency
    burn = [UNREACHABLE] * graph.vertex_count
    frontier: List[int] = []
    current_round = 0
    position = 0
    while frontier or position < len(activators):
        current_round += 1
        next_frontier: List[int] = []
        for vertex in frontier:
            for neighbour in adjacency[vertex]:
                if burn[neighbour] == UNREACHABLE:
                    burn[neighbour] = current_round
                    next_frontier.append(neighbour)
        if position < len(activators):
            activator = activators[position]
            position += 1
            if burn[activator] == UNREACHABLE:
                burn[activator] = current_round
                next_frontier.append(activator)
        frontier = next_frontier
    return burn


def burn_times(graph: Graph, activators: Sequence[int]) -> Tuple[np.ndarray, int]:
    """Return the burn round of every vertex and the completion round."""
    check_connected(graph)
    _check_activators(graph, activators)
    burn = np.array(_propagate(graph, activators), dtype=np.int64)
    return burn, int(burn.max())


def validate_sequence(
    graph: Graph,
    activators: Sequence[int],
    k: int,
    strict_spacing: bool = False,
) -> SequenceValidation:
    """Return whether the activators burn the graph within k rounds.

    Coverage requires every vertex v to have some i with d(v, x_i) <= k - i.
    Spacing requires d(x_i, x_j) >= j - i for i < j, or > j - i when
    `strict_spacing` is set.
    """
    _check_activators(graph, activators)
    # Unreachable vertices are farther than any number of rounds.
    far = graph.vertex_count + k + 1
    rows = []
    for activator in activators:
        dist = np.array(_bfs(graph, activator)[0], dtype=np.int64)
        rows.append(np.where(dist == UNREACHABLE, far, dist))
    distances = np.vstack(rows)

    rounds = np.arange(1, len(activators) + 1, dtype=np.int64)[:, None]
    earliest = (distances + rounds).min(axis=0)
    uncovered = np.flatnonzero(earliest > k).tolist()

    spacing_violations: List[Tuple[int, int]] = []
    for j in range(1, len(activators)):
        for i in range(j):
            gap = int(distances[i, activators[j]])
            if gap < j - i or (strict_spacing and gap == j - i):
                spacing_violations.append((i + 1, j + 1))

    return SequenceValidation(
        valid=not uncovered and not spacing_violations,
        rounds=k,
        uncovered=uncovered,
        spacing_violations=spacing_violations,
    )


def activator_of(graph: Graph, activators: Sequence[int]) -> np.ndarray:
    """Return for every vertex the 0-based index of the activator that burns it.

    The activator of v minimises i + d(v, x_i); ties go to the earliest
    activator and unreachable vertices get UNREACHABLE.
    """
    _check_activators(graph, activators)
    far = np.iinfo(np.int64).max // 2
    arrivals = []
    for index, activator in enumerate(activators, start=1):
        dist = np.array(_bfs(graph, activator)[0], dtype=np.int64)
        arrivals.append(np.where(dist == UNREACHABLE, far, dist + index))
    arrivals = np.vstack(arrivals)
    owners = arrivals.argmin(axis=0)
    return np.where(arrivals.min(axis=0) == far, UNREACHABLE, owners)


def initial_state(graph: Graph, first_activator: int) -> BurnState:
    """Return the round 1 state with the first activator lit."""
    check_connected(graph)
    graph.check_vertex(first_activator)
    dist, _ = _bfs(graph, first_activator)
    return BurnState(
        round=1,
        burn_time=np.array(dist, dtype=np.int64) + 1,
        activators=(first_activator,),
    )


def unburned(state: BurnState) -> np.ndarray:
    """Return the vertices not yet burned at the end of the state's round."""
    return np.flatnonzero(state.burn_time > state.round)


def time_to_burn_field(graph: Graph, state: BurnState) -> TimeToBurnField:
    """Return t^k(v) = burn_time[v] - k for unburned v and its maximum t.

    The maximum is 0 once every vertex is burned.
    """
    if len(state.activators) == 0:
        raise EmptyGraphError("The time-to-burn field needs at least one activator.")
    assert len(state.burn_time) == graph.vertex_count
    vertices = unburned(state)
    values = state.burn_time[vertices] - state.round
    return TimeToBurnField(
        vertices=vertices,
        values=values,
        maximum=int(values.max()) if len(values) > 0 else 0,
    )


def advance_round(
    graph: Graph, state: BurnState, new_activator: Optional[int] = None
) -> BurnState:
    """Return the state of the next round, lighting the new activator if given.

    Spread is implicit in the burn_time formula. The activator may already
    be reached by spread in the new round itself, but not earlier.
    """
    next_round = state.round + 1
    if new_activator is None:
        return BurnState(
            round=next_round,
            burn_time=state.burn_time,
            activators=state.activators,
        )

    graph.check_vertex(new_activator)
    if new_activator in state.activators:
        raise DuplicateActivatorError(f"Activator {new_activator} already placed.")
    burn_time = state.burn_time.copy()
    if burn_time[new_activator] < next_round:
        raise AlreadyBurnedError(
            f"Vertex {new_activator} burned at round {burn_time[new_activator]}, "
            f"before round {next_round}."
        )

    # Relax only where the new fire arrives strictly earlier; beyond such a
    # vertex the previous times are already within one round of it.
    adjacency = graph.adjacency
    burn_time[new_activator] = next_round
    frontier = [new_activator]
    arrival = next_round
    while frontier:
        arrival += 1
        next_frontier = []
        for vertex in frontier:
            for neighbour in adjacency[vertex]:
                if burn_time[neighbour] > arrival:
                    burn_time[neighbour] = arrival
                    next_frontier.append(neighbour)
        frontier = next_frontier

    return BurnState(
        round=next_round,
        burn_time=burn_time,
        activators=state.activators + (new_activator,),
    )
