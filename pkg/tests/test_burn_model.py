"""Tests for the burning process primitives."""

import pickle
import numpy as np
import pytest
from burning.graph import Graph
from burning.burn_model import (
    BurningSequence,
    activator_of,
    advance_round,
    burn_times,
    initial_state,
    time_to_burn_field,
    unburned,
    validate_sequence,
)
from burning.exceptions import (
    AlreadyBurnedError,
    DisconnectedGraphError,
    DuplicateActivatorError,
    EmptyGraphError,
    VertexOutOfRangeError,
)
from burning.generators import complete_graph, cycle_graph, path_graph


def theta_222() -> Graph:
    """Return two hubs 0 and 1 joined by three paths of two edges."""
    return Graph.from_edges(5, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)])


def test_burn_times_examples():
    """Burn rounds follow min_i (i + d(v, x_i))."""
    times, completion = burn_times(path_graph(3), [1])
    assert times.tolist() == [2, 1, 2]
    assert completion == 2
    assert burn_times(path_graph(9), [2, 6, 8])[1] == 3
    assert burn_times(complete_graph(5), [0])[1] == 2


def test_burn_times_errors():
    """Activators must be distinct in-range vertices of a connected graph."""
    with pytest.raises(DuplicateActivatorError):
        burn_times(path_graph(3), [0, 0])
    with pytest.raises(VertexOutOfRangeError):
        burn_times(path_graph(3), [3])
    with pytest.raises(EmptyGraphError):
        burn_times(path_graph(3), [])
    with pytest.raises(DisconnectedGraphError):
        burn_times(Graph.from_edges(2, []), [0])


@pytest.mark.parametrize(
    "graph,activators,k,valid",
    [
        (path_graph(3), [0, 2], 2, True),
        (path_graph(3), [1], 1, False),
        (path_graph(9), [2, 6, 8], 3, True),
        (path_graph(9), [2, 6, 8], 2, False),
        (complete_graph(1), [0], 1, True),
    ],
)
def test_validate_sequence_examples(graph, activators, k, valid):
    """Coverage and spacing of known sequences."""
    assert validate_sequence(graph, activators, k).valid is valid


def test_validate_sequence_reports_violations():
    """Uncovered vertices and spacing violations are listed."""
    result = validate_sequence(path_graph(3), [1], 1)
    assert not result
    assert result.uncovered == [0, 2]
    assert len(result.report()) == 2

    # x_2 = 1 is adjacent to x_1 = 0 and is burned by spread in round 2.
    adjacent = validate_sequence(path_graph(4), [0, 1], 3)
    assert adjacent.spacing_violations == []
    strict = validate_sequence(path_graph(4), [0, 1], 3, strict_spacing=True)
    assert strict.spacing_violations == [(1, 2)]
    assert not strict

    # x_3 = 1 is already burned by x_1 = 0 in round 2.
    late = validate_sequence(path_graph(5), [0, 4, 1], 3)
    assert late.spacing_violations == [(1, 3)]


def test_initial_state_and_time_to_burn():
    """The time-to-burn field after the first activator."""
    state = initial_state(path_graph(4), 0)
    assert state.round == 1
    field = time_to_burn_field(path_graph(4), state)
    assert field.as_dict() == {1: 1, 2: 2, 3: 3}
    assert field.maximum == 3
    assert unburned(state).tolist() == [1, 2, 3]

    complete = time_to_burn_field(complete_graph(6), initial_state(complete_graph(6), 0))
    assert set(complete.values.tolist()) == {1}
    assert complete.maximum == 1

    theta = time_to_burn_field(theta_222(), initial_state(theta_222(), 0))
    assert theta.maximum == 2
    assert theta.as_dict()[1] == 2


def test_advance_round_examples():
    """Rounds without activators let the fire spread."""
    state = initial_state(path_graph(5), 2)
    state = advance_round(path_graph(5), state)
    state = advance_round(path_graph(5), state)
    assert state.is_complete()
    assert state.round == 3
    assert state.completion_time == 3

    graph = path_graph(9)
    state = initial_state(graph, 2)
    state = advance_round(graph, state, 6)
    assert not state.is_complete()
    state = advance_round(graph, state, 8)
    assert state.is_complete()
    assert state.into_sequence() == BurningSequence((2, 6, 8), 3)

    single = initial_state(complete_graph(1), 0)
    assert single.is_complete()
    assert single.into_sequence().completion_time == 1
    assert len(single.into_sequence()) == 1


def test_advance_round_matches_burn_times():
    """Incremental rounds agree with the closed formula."""
    graph = cycle_graph(15)
    state = initial_state(graph, 0)
    for activator in (7, 11, 3):
        state = advance_round(graph, state, activator)
    assert state.burn_time.tolist() == burn_times(graph, [0, 7, 11, 3])[0].tolist()


def test_advance_round_rejects_burned_activators():
    """An activator burned before its round is refused."""
    graph = path_graph(5)
    state = advance_round(graph, initial_state(graph, 0))
    with pytest.raises(AlreadyBurnedError):
        advance_round(graph, state, 1)
    with pytest.raises(DuplicateActivatorError):
        advance_round(graph, initial_state(graph, 0), 0)
    # Reached by spread in the new round itself is allowed.
    assert advance_round(graph, initial_state(graph, 0), 1).activators == (0, 1)


def test_activator_of():
    """Each vertex is owned by the activator whose fire arrives first."""
    owners = activator_of(path_graph(9), [2, 6, 8])
    assert owners.tolist() == [0, 0, 0, 0, 0, 1, 1, 1, 2]
    assert activator_of(Graph.from_edges(3, [(0, 1)]), [0]).tolist()[:2] == [0, 0]


def test_validation_properties_on_random_sequences():
    """Burn rounds and validation agree on random spaced sequences."""
    rng = np.random.default_rng(5)
    graph = cycle_graph(20)
    for _ in range(20):
        state = initial_state(graph, int(rng.integers(20)))
        while not state.is_complete():
            candidates = np.flatnonzero(state.burn_time > state.round + 1)
            chosen = int(rng.choice(candidates)) if len(candidates) > 0 else None
            state = advance_round(graph, state, chosen)
        sequence = state.into_sequence()
        assert validate_sequence(graph, sequence.activators, sequence.completion_time)
        assert not validate_sequence(graph, sequence.activators, sequence.completion_time - 1)


def test_errors_survive_pickling():
    """Errors carrying extra fields cross process boundaries."""
    error = pickle.loads(pickle.dumps(VertexOutOfRangeError(5, 3)))
    assert (error.vertex, error.vertex_count) == (5, 3)
