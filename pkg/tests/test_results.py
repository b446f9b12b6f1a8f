"""Tests for the result rows and their CSV and JSON-lines renderings."""

import json
import pandas as pd
import pytest
from burning.generators import ThetaSpec, gen_theta, path_graph
from burning.oracle import AttachedBound, attach_bound
from burning.results import (
    COLUMNS,
    ResultRecord,
    read_results,
    records_to_dataframe,
    sort_records,
    to_csv_text,
    write_results,
)

HEADER = "instance,n,m,max_deg,avg_deg,heuristic,seed,length,bound_name,bound,gap,wall_time_ms"


def theta529_records():
    """Return one row per heuristic on theta529-74-472-57."""
    instance = gen_theta(ThetaSpec(472, 57, seed=9, sample=74))
    bound = attach_bound(instance.graph, name=instance.name)
    lengths = {
        "ctr-half": 28,
        "ctr-far": 26,
        "rnd-half": 30,
        "rnd-far": 26,
        "dfs-path": 24,
        "d-bfs-path": 29,
    }
    return [
        ResultRecord.build(instance.name, instance.graph, heuristic, 0, length, bound, None)
        for heuristic, length in lengths.items()
    ]


def test_csv_header():
    """The columns come in their fixed order."""
    csv_text, jsonl_text = write_results([])
    assert csv_text == HEADER + "\n"
    assert jsonl_text == ""
    assert ",".join(COLUMNS) == HEADER


def test_theta529_rows():
    """Six rows against the expected bound 24."""
    frame = records_to_dataframe(theta529_records())
    assert len(frame) == 6
    assert frame["bound"].tolist() == [24] * 6
    assert frame["gap"].tolist() == [4, 2, 6, 2, 0, 5]
    assert set(frame["bound_name"]) == {"theta"}
    assert frame["n"].tolist() == [529] * 6
    assert frame["m"].tolist() == [530] * 6
    lines = to_csv_text(frame).splitlines()
    assert lines[0] == HEADER
    assert lines[1].startswith("theta529-74-472-57,529,530,3,2.0,ctr-half,0,28,theta,24,4,")


def test_gap_only_against_upper_bounds():
    """Lower bounds are reported without a gap."""
    graph = path_graph(9)
    lower = ResultRecord.build("P9", graph, "ctr-far", 0, 4, attach_bound(graph), 1.25)
    assert (lower.bound_name, lower.bound_value, lower.gap) == ("trivial-lower", 3, None)
    upper = ResultRecord.build(
        "P9", graph, "ctr-far", 0, 4, AttachedBound("cluster", 5, True), None
    )
    assert upper.gap == -1
    missing = ResultRecord.build("P9", graph, "exact", None, None, attach_bound(graph), None)
    assert missing.gap is None


def test_jsonl_nulls():
    """Missing values are written as null."""
    graph = path_graph(9)
    record = ResultRecord.build("P9", graph, "exact", None, None, attach_bound(graph), None)
    _, jsonl_text = write_results([record])
    row = json.loads(jsonl_text.splitlines()[0])
    assert row["instance"] == "P9"
    assert row["seed"] is None
    assert row["length"] is None
    assert row["gap"] is None
    assert row["wall_time_ms"] is None
    assert row["bound"] == 3
    assert row["avg_deg"] == pytest.approx(1.8)


def test_csv_missing_values_are_empty():
    """Missing values are left empty in CSV."""
    graph = path_graph(9)
    record = ResultRecord.build("P9", graph, "exact", None, None, attach_bound(graph), None)
    csv_text, _ = write_results([record])
    assert csv_text.splitlines()[1] == "P9,9,8,2,1.8,exact,,,trivial-lower,3,,"


@pytest.mark.parametrize("suffix", [".csv", ".jsonl"])
def test_read_results_round_trip(tmp_path, suffix):
    """Written tables read back unchanged."""
    graph = path_graph(9)
    records = theta529_records() + [
        ResultRecord.build("P9", graph, "exact", None, 3, attach_bound(graph), 12.5)
    ]
    frame = records_to_dataframe(records)
    csv_text, jsonl_text = write_results(records)
    path = tmp_path / f"records{suffix}"
    path.write_text(csv_text if suffix == ".csv" else jsonl_text)
    pd.testing.assert_frame_equal(read_results(str(path)), frame)


def test_read_results_unknown_suffix(tmp_path):
    """Only CSV and JSON lines are read."""
    with pytest.raises(ValueError, match="Available formats"):
        read_results(str(tmp_path / "records.parquet"))


def test_sort_records():
    """Rows are ordered by instance, heuristic and seed."""
    graph = path_graph(9)
    bound = attach_bound(graph)
    records = [
        ResultRecord.build("b", graph, "rnd-far", 2, 4, bound, None),
        ResultRecord.build("a", graph, "rnd-far", 1, 4, bound, None),
        ResultRecord.build("b", graph, "rnd-far", 1, 4, bound, None),
        ResultRecord.build("b", graph, "ctr-far", 0, 4, bound, None),
    ]
    frame = sort_records(records_to_dataframe(records))
    assert list(zip(frame["instance"], frame["heuristic"], frame["seed"])) == [
        ("a", "rnd-far", 1),
        ("b", "ctr-far", 0),
        ("b", "rnd-far", 1),
        ("b", "rnd-far", 2),
    ]
