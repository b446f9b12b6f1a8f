"""Tests for the summary statistics."""

import compress_json
import pytest
from burning.generators import path_graph
from burning.oracle import AttachedBound
from burning.results import ResultRecord, records_to_dataframe
from burning.stats import compute_summary

THETA = AttachedBound("theta", 24, True)
LOWER = AttachedBound("trivial-lower", 3, False)


def record(instance, heuristic, length, bound=THETA, seed=0):
    """Return a result row on a stand-in graph."""
    return ResultRecord.build(instance, path_graph(9), heuristic, seed, length, bound, None)


def test_all_equal_lengths():
    """Every heuristic meeting the bound succeeds and wins everywhere."""
    frame = records_to_dataframe(
        record(instance, heuristic, 24)
        for instance in ("a", "b")
        for heuristic in ("ctr-half", "ctr-far", "dfs-path")
    )
    summary = compute_summary(frame)
    assert summary.instance_count == 2
    assert summary.bounded_instance_count == 2
    assert summary.success_rate == {"ctr-half": 1.0, "ctr-far": 1.0, "dfs-path": 1.0}
    assert summary.win_rate == {"ctr-half": 1.0, "ctr-far": 1.0, "dfs-path": 1.0}
    assert summary.best_success_rate == 1.0
    assert summary.average_gap == 0.0
    assert summary.gap_std == 0.0


def test_gap_statistics():
    """Gaps of 0 and 2 average 1 with population deviation 1."""
    frame = records_to_dataframe(
        [
            record("a", "ctr-far", 24),
            record("a", "rnd-far", 25),
            record("b", "ctr-far", 27),
            record("b", "rnd-far", 26),
        ]
    )
    summary = compute_summary(frame)
    assert summary.average_gap == pytest.approx(1.0)
    assert summary.gap_std == pytest.approx(1.0)
    assert summary.best_success_rate == pytest.approx(0.5)
    assert summary.within_one_rate == pytest.approx(0.5)
    assert summary.success_rate == {"ctr-far": 0.5, "rnd-far": 0.0}


def test_win_rates_count_ties_for_every_winner():
    """Win rates may sum above one."""
    frame = records_to_dataframe(
        [
            record("a", "ctr-half", 5),
            record("a", "ctr-far", 5),
            record("a", "rnd-half", 6),
            record("b", "ctr-half", 7),
            record("b", "ctr-far", 6),
            record("b", "rnd-half", 6),
        ]
    )
    summary = compute_summary(frame)
    assert summary.win_rate == {"ctr-half": 0.5, "ctr-far": 1.0, "rnd-half": 0.5}
    assert sum(summary.win_rate.values()) == pytest.approx(2.0)


def test_repetitions_keep_the_shortest_run():
    """Randomized heuristics are judged by their best seed."""
    frame = records_to_dataframe(
        [
            record("a", "rnd-half", 26, seed=1),
            record("a", "rnd-half", 24, seed=2),
            record("a", "ctr-half", 25),
        ]
    )
    summary = compute_summary(frame)
    assert summary.success_rate == {"ctr-half": 0.0, "rnd-half": 1.0}
    assert summary.win_rate == {"ctr-half": 0.0, "rnd-half": 1.0}


def test_exact_and_missing_rows_are_ignored():
    """Exact solver rows and rows without a length do not count."""
    rows = [record("a", "ctr-far", 25), record("a", "rnd-far", 26)]
    baseline = compute_summary(records_to_dataframe(rows))
    with_exact = compute_summary(
        records_to_dataframe(
            rows + [record("a", "exact", 3, seed=None), record("a", "dfs-path", None)]
        )
    )
    assert with_exact == baseline
    assert compute_summary(records_to_dataframe([])).instance_count == 0


def test_lower_bounds_certify_but_do_not_count_as_success():
    """Instances with only a lower bound feed the certified optimal rate."""
    frame = records_to_dataframe(
        [
            record("a", "ctr-far", 24),
            record("c", "ctr-far", 3, bound=LOWER),
            record("d", "ctr-far", 4, bound=LOWER),
        ]
    )
    summary = compute_summary(frame)
    assert summary.instance_count == 3
    assert summary.bounded_instance_count == 1
    assert summary.success_rate == {"ctr-far": 1.0}
    assert summary.certified_optimal_rate == pytest.approx(0.5)


def test_summary_ignores_row_order():
    """Shuffled tables give the same statistics."""
    frame = records_to_dataframe(
        record(instance, heuristic, length, seed=seed)
        for instance, shift in (("a", 0), ("b", 1), ("c", 3))
        for heuristic, base in (("ctr-half", 24), ("rnd-far", 25), ("dfs-path", 23))
        for seed, length in ((1, base + shift), (2, base + shift + 1))
    )
    shuffled = frame.sample(frac=1.0, random_state=0).reset_index(drop=True)
    assert compute_summary(shuffled) == compute_summary(frame)


def test_render_and_save(tmp_path):
    """The text table lists labels and the JSON keeps the deviation kind."""
    summary = compute_summary(
        records_to_dataframe([record("a", "ctr-half", 24), record("a", "d-bfs-path", 26)])
    )
    text = summary.render()
    assert "Ctr-Half" in text
    assert "D-BFS-path" in text
    assert "Success Rate" in text
    assert "100.0%" in text
    path = str(tmp_path / "summary.json")
    summary.save(path)
    saved = compress_json.load(path)
    assert saved == summary.into_dict()
    assert saved["gap_std_kind"] == "population"
    assert saved["success_rate"] == {"ctr-half": 1.0, "d-bfs-path": 0.0}
