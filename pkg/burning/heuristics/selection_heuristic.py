"""Submodule providing the four heuristics selecting activators from the time-to-burn field."""

from time import perf_counter
import numpy as np
from burning.graph import Graph
from burning.traversal import check_connected, metrics
from burning.burn_model import (
    BurnState,
    TimeToBurnField,
    advance_round,
    initial_state,
    time_to_burn_field,
)
from burning.exceptions import AllBurnedError
from burning.heuristics.heuristic import Heuristic, HeuristicId, HeuristicRun


def first_activator_center(graph: Graph) -> int:
    """Return the smallest-id vertex of minimum eccentricity."""
    return metrics(graph).center[0]


def first_activator_random(graph: Graph, rng: np.random.Generator) -> int:
    """Return a vertex drawn uniformly from the graph."""
    graph.check_not_empty()
    return int(rng.integers(graph.vertex_count))


def _unburned_field(graph: Graph, state: BurnState) -> TimeToBurnField:
    """Return the time-to-burn field, raising when nothing is left to burn."""
    field = time_to_burn_field(graph, state)
    if len(field.vertices) == 0:
        raise AllBurnedError(f"Every vertex is burned at round {state.round}.")
    return field


def _nearest_to(field: TimeToBurnField, target: int) -> int:
    """Return the unburned vertex whose time-to-burn is nearest the target.

    Ties go to the larger time-to-burn, then to the smallest id.
    """
    order = np.lexsort((field.vertices, -field.values, np.abs(field.values - target)))
    return int(field.vertices[order[0]])


def next_activator_half(graph: Graph, state: BurnState) -> int:
    """Return the unburned vertex with time-to-burn nearest to ceil(t / 2)."""
    field = _unburned_field(graph, state)
    return _nearest_to(field, (field.maximum + 1) // 2)


def next_activator_far(graph: Graph, state: BurnState, offset: int = 0) -> int:
    """Return the unburned vertex with maximum time-to-burn, smallest id on ties.

    A positive offset targets t - offset instead, the "max -1" reading when
    offset is 1.
    """
    assert offset >= 0, f"Invalid far offset: {offset}"
    field = _unburned_field(graph, state)
    if offset == 0:
        # Vertices are sorted, so argmax keeps the smallest id among ties.
        return int(field.vertices[np.argmax(field.values)])
    return _nearest_to(field, field.maximum - offset)


def run_selection_heuristic(
    graph: Graph,
    heuristic: HeuristicId,
    seed: int,
    far_minus_one: bool = False,
) -> HeuristicRun:
    """Return the run of a Ctr-/Rnd- heuristic on the connected graph.

    The first activator comes from the center or uniformly at random; each
    following round places the next activator chosen from the time-to-burn
    field until every vertex is burned.
    """
    assert heuristic.is_selection(), f"{heuristic.value} is not a selection heuristic."
    started = perf_counter()
    graph.check_not_empty()
    check_connected(graph)
    rng = np.random.default_rng(seed)

    if heuristic.starts_at_center():
        first = first_activator_center(graph)
    else:
        first = first_activator_random(graph, rng)

    state = initial_state(graph, first)
    while not state.is_complete():
        assert (
            state.round < graph.vertex_count
        ), f"{heuristic.value} exceeded {graph.vertex_count} rounds."
        if heuristic.selects_half():
            chosen = next_activator_half(graph, state)
        else:
            chosen = next_activator_far(graph, state, offset=int(far_minus_one))
        state = advance_round(graph, state, chosen)

    return HeuristicRun(
        heuristic=heuristic,
        seed=seed,
        sequence=state.into_sequence(),
        wall_time=perf_counter() - started,
    )


class SelectionHeuristic(Heuristic):
    """Heuristic choosing activators from the time-to-burn field."""

    def __init__(self, heuristic: HeuristicId, far_minus_one: bool = False):
        """Initialize the selection heuristic."""
        assert heuristic.is_selection(), f"{heuristic.value} is not a selection heuristic."
        self._heuristic: HeuristicId = heuristic
        self._far_minus_one: bool = far_minus_one

    def heuristic_id(self) -> HeuristicId:
        """Return the identifier of the heuristic."""
        return self._heuristic

    def run(self, graph: Graph, seed: int) -> HeuristicRun:
        """Return a burning sequence of the connected graph."""
        return run_selection_heuristic(
            graph,
            self._heuristic,
            seed=seed,
            far_minus_one=self._far_minus_one,
        )
