"""Submodule defining the Heuristic interface and the heuristic run record."""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from typing import List
from burning.graph import Graph
from burning.burn_model import BurningSequence


class HeuristicId(Enum):
    """The six burning heuristics, valued by their command line names."""

    CTR_HALF = "ctr-half"
    CTR_FAR = "ctr-far"
    RND_HALF = "rnd-half"
    RND_FAR = "rnd-far"
    DFS_PATH = "dfs-path"
    D_BFS_PATH = "d-bfs-path"

    @property
    def label(self) -> str:
        """Return the table label of the heuristic."""
        return {
            "ctr-half": "Ctr-Half",
            "ctr-far": "Ctr-Far",
            "rnd-half": "Rnd-Half",
            "rnd-far": "Rnd-Far",
            "dfs-path": "DFS-path",
            "d-bfs-path": "D-BFS-path",
        }[self.value]

    def is_selection(self) -> bool:
        """Return whether the heuristic picks activators from the time-to-burn field."""
        return self not in (HeuristicId.DFS_PATH, HeuristicId.D_BFS_PATH)

    def starts_at_center(self) -> bool:
        """Return whether the first activator is taken from the graph center."""
        return self in (HeuristicId.CTR_HALF, HeuristicId.CTR_FAR)

    def is_randomized(self) -> bool:
        """Return whether the run depends on its seed."""
        return not self.starts_at_center()

    def selects_half(self) -> bool:
        """Return whether next activators target half the maximum time-to-burn."""
        return self in (HeuristicId.CTR_HALF, HeuristicId.RND_HALF)

    @staticmethod
    def from_name(name: str) -> "HeuristicId":
        """Return the heuristic with the given command line name."""
        for heuristic in HeuristicId:
            if heuristic.value == name:
                return heuristic
        raise ValueError(
            f"Heuristic {name} not found. "
            f"Available heuristics are {HeuristicId.names()}."
        )

    @staticmethod
    def names() -> List[str]:
        """Return the command line names of every heuristic."""
        return [heuristic.value for heuristic in HeuristicId]


@dataclass(frozen=True)
class HeuristicRun:
    """Result of one heuristic run on one graph."""

    heuristic: HeuristicId
    seed: int
    sequence: BurningSequence
    wall_time: float

    @property
    def length(self) -> int:
        """Return the burning sequence length found."""
        return self.sequence.completion_time


class Heuristic(ABC):
    """Interface for burning heuristics."""

    @abstractmethod
    def heuristic_id(self) -> HeuristicId:
        """Return the identifier of the heuristic."""

    def name(self) -> str:
        """Return the command line name of the heuristic."""
        return self.heuristic_id().value

    @abstractmethod
    def run(self, graph: Graph, seed: int) -> HeuristicRun:
        """Return a burning sequence of the connected graph."""
