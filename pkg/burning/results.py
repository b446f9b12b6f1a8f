"""Submodule providing the experiment result rows and their CSV / JSON-lines renderings."""

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Tuple
import os
import pandas as pd
from burning.graph import Graph
from burning.oracle import AttachedBound

COLUMNS: List[str] = [
    "instance",
    "n",
    "m",
    "max_deg",
    "avg_deg",
    "heuristic",
    "seed",
    "length",
    "bound_name",
    "bound",
    "gap",
    "wall_time_ms",
]

INTEGER_COLUMNS: List[str] = ["n", "m", "max_deg", "seed", "length", "bound", "gap"]
FLOAT_COLUMNS: List[str] = ["avg_deg", "wall_time_ms"]
TEXT_COLUMNS: List[str] = ["instance", "heuristic", "bound_name"]


@dataclass(frozen=True)
class ResultRecord:
    """One (instance, heuristic, seed) result row."""

    instance_name: str
    vertex_count: int
    edge_count: int
    max_degree: int
    avg_degree: float
    heuristic: str
    seed: Optional[int]
    length_found: Optional[int]
    bound_name: Optional[str]
    bound_value: Optional[int]
    gap: Optional[int]
    wall_time_ms: Optional[float]
    activators: Tuple[int, ...] = field(default=(), compare=False, repr=False)

    @staticmethod
    def build(
        instance_name: str,
        graph: Graph,
        heuristic: str,
        seed: Optional[int],
        length_found: Optional[int],
        bound: Optional[AttachedBound],
        wall_time_ms: Optional[float],
        activators: Tuple[int, ...] = (),
    ) -> "ResultRecord":
        """Return the record of a run, the gap set only against upper bounds."""
        gap: Optional[int] = None
        if bound is not None and bound.is_upper and length_found is not None:
            gap = length_found - bound.value
        return ResultRecord(
            instance_name=instance_name,
            vertex_count=graph.vertex_count,
            edge_count=graph.edge_count,
            max_degree=graph.max_degree,
            avg_degree=round(graph.average_degree, 1),
            heuristic=heuristic,
            seed=seed,
            length_found=length_found,
            bound_name=bound.name if bound is not None else None,
            bound_value=bound.value if bound is not None else None,
            gap=gap,
            wall_time_ms=None if wall_time_ms is None else round(wall_time_ms, 1),
            activators=activators,
        )

    def into_dict(self) -> Dict[str, Any]:
        """Return the record keyed by the output column names."""
        return {
            "instance": self.instance_name,
            "n": self.vertex_count,
            "m": self.edge_count,
            "max_deg": self.max_degree,
            "avg_deg": self.avg_degree,
            "heuristic": self.heuristic,
            "seed": self.seed,
            "length": self.length_found,
            "bound_name": self.bound_name,
            "bound": self.bound_value,
            "gap": self.gap,
            "wall_time_ms": self.wall_time_ms,
        }


def _normalize(frame: pd.DataFrame) -> pd.DataFrame:
    """Return the frame with the output columns in order and nullable dtypes."""
    frame = frame.reindex(columns=COLUMNS)
    for column in INTEGER_COLUMNS:
        frame[column] = pd.to_numeric(frame[column]).astype("Int64")
    for column in FLOAT_COLUMNS:
        frame[column] = pd.to_numeric(frame[column]).astype("float64")
    for column in TEXT_COLUMNS:
        frame[column] = frame[column].astype("string")
    return frame


def records_to_dataframe(records: Iterable[ResultRecord]) -> pd.DataFrame:
    """Return the records as a table with the output columns."""
    return _normalize(pd.DataFrame([record.into_dict() for record in records], columns=COLUMNS))


def sort_records(frame: pd.DataFrame) -> pd.DataFrame:
    """Return the table sorted by instance, heuristic and seed."""
    return frame.sort_values(["instance", "heuristic", "seed"], kind="mergesort").reset_index(
        drop=True
    )


def to_csv_text(frame: pd.DataFrame) -> str:
    """Return the table as CSV text, missing values left empty."""
    return _normalize(frame).to_csv(index=False, float_format="%.1f", lineterminator="\n")


def to_jsonl_text(frame: pd.DataFrame) -> str:
    """Return the table as one JSON object per line, missing values as null."""
    if len(frame) == 0:
        return ""
    text = _normalize(frame).to_json(orient="records", lines=True)
    return text if text.endswith("\n") else text + "\n"


def write_results(records: Iterable[ResultRecord]) -> Tuple[str, str]:
    """Return the CSV text and the JSON-lines text of the records."""
    frame = records_to_dataframe(records)
    return to_csv_text(frame), to_jsonl_text(frame)


def read_results(path: str) -> pd.DataFrame:
    """Return the records stored in a .csv or .jsonl file."""
    if path.endswith(".jsonl"):
        if os.path.getsize(path) == 0:
            return records_to_dataframe([])
        return _normalize(pd.read_json(path, orient="records", lines=True, dtype=False))
    if path.endswith(".csv"):
        return _normalize(pd.read_csv(path, dtype={"instance": str, "heuristic": str}))
    raise ValueError(f"Unknown result file {path}. Available formats are .csv and .jsonl.")
