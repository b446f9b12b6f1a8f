"""Submodule providing the summary statistics of an experiment.

Per instance, each heuristic keeps its shortest length over seeds and the
best-of-all length is the minimum over heuristics. Success means a length
within the instance's upper bound; the gap statistics use the population
standard deviation. A heuristic wins an instance when it attains the
best-of-all length, so ties count for every winner and win rates may sum
above 1.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional
import numpy as np
import pandas as pd
import compress_json
from burning.heuristics import HeuristicId


def _rate(hits: int, total: int) -> Optional[float]:
    """Return hits / total, None when there is nothing to count."""
    return hits / total if total > 0 else None


@dataclass(frozen=True)
class SummaryStats:
    """Bound conformance and comparison statistics of the heuristics."""

    instance_count: int
    bounded_instance_count: int
    success_rate: Dict[str, Optional[float]] = field(default_factory=dict)
    win_rate: Dict[str, Optional[float]] = field(default_factory=dict)
    best_success_rate: Optional[float] = None
    within_one_rate: Optional[float] = None
    average_gap: Optional[float] = None
    gap_std: Optional[float] = None
    certified_optimal_rate: Optional[float] = None

    def into_dict(self) -> Dict[str, Any]:
        """Return the statistics as a dictionary."""
        return {
            "instance_count": self.instance_count,
            "bounded_instance_count": self.bounded_instance_count,
            "success_rate": self.success_rate,
            "win_rate": self.win_rate,
            "best_success_rate": self.best_success_rate,
            "within_one_rate": self.within_one_rate,
            "average_gap": self.average_gap,
            "gap_std": self.gap_std,
            "gap_std_kind": "population",
            "certified_optimal_rate": self.certified_optimal_rate,
        }

    def save(self, path: str) -> None:
        """Save the statistics as JSON."""
        compress_json.dump(self.into_dict(), path)

    def render(self) -> str:
        """Return a text table of success and win rates per heuristic."""

        def percent(value: Optional[float]) -> str:
            return "-" if value is None else f"{100 * value:.1f}%"

        labels = {heuristic.value: heuristic.label for heuristic in HeuristicId}
        table = pd.DataFrame(
            {
                "Heuristic": [labels.get(name, name) for name in self.success_rate],
                "Success Rate": [percent(rate) for rate in self.success_rate.values()],
                "Win Rate": [percent(self.win_rate.get(name)) for name in self.success_rate],
            }
        )
        lines = [
            table.to_string(index=False),
            "",
            f"instances: {self.instance_count} ({self.bounded_instance_count} with an upper bound)",
            f"best-of-all success rate: {percent(self.best_success_rate)}",
            f"best-of-all within one of the bound: {percent(self.within_one_rate)}",
            "average gap: "
            + ("-" if self.average_gap is None else f"{self.average_gap:.4f}")
            + ", population std: "
            + ("-" if self.gap_std is None else f"{self.gap_std:.4f}"),
            f"certified optimal (trivial lower bound met): {percent(self.certified_optimal_rate)}",
        ]
        return "\n".join(lines)


def compute_summary(records: pd.DataFrame) -> SummaryStats:
    """Return the summary statistics of the heuristic rows of a results table."""
    rows = records[~records["heuristic"].str.startswith("exact") & records["length"].notna()]
    if len(rows) == 0:
        return SummaryStats(instance_count=0, bounded_instance_count=0)

    per_heuristic = (
        rows.groupby(["instance", "heuristic"], sort=True)["length"].min().unstack("heuristic")
    )
    bounds = rows.groupby("instance", sort=True).agg(
        bound_name=("bound_name", "first"),
        bound=("bound", "first"),
    )
    best = per_heuristic.min(axis=1)
    order = [name for name in HeuristicId.names() if name in per_heuristic.columns]
    order += sorted(set(per_heuristic.columns) - set(order))

    upper = bounds["bound_name"].isin(["theta", "cluster"]) & bounds["bound"].notna()
    bounded = bounds.index[upper]
    success_rate = {}
    for name in order:
        lengths = per_heuristic.loc[bounded, name].dropna()
        hits = int((lengths <= bounds.loc[lengths.index, "bound"]).sum())
        success_rate[name] = _rate(hits, len(lengths))

    win_rate = {}
    for name in order:
        lengths = per_heuristic[name].dropna()
        win_rate[name] = _rate(int((lengths == best[lengths.index]).sum()), len(lengths))

    gaps = np.sort((best[bounded] - bounds.loc[bounded, "bound"]).to_numpy(dtype=np.int64))
    lower = bounds.index[bounds["bound_name"].isin(["trivial-lower"]) & bounds["bound"].notna()]
    certified = int((best[lower] == bounds.loc[lower, "bound"]).sum())

    return SummaryStats(
        instance_count=len(best),
        bounded_instance_count=len(bounded),
        success_rate=success_rate,
        win_rate=win_rate,
        best_success_rate=_rate(int((gaps <= 0).sum()), len(gaps)),
        within_one_rate=_rate(int((gaps <= 1).sum()), len(gaps)),
        average_gap=float(gaps.mean()) if len(gaps) > 0 else None,
        gap_std=float(gaps.std(ddof=0)) if len(gaps) > 0 else None,
        certified_optimal_rate=_rate(certified, len(lower)),
    )
