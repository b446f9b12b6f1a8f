"""Submodule defining the settings of a burning experiment."""

from typing import Dict, List, Optional
from burning.heuristics import HeuristicId
from burning.oracle import DEFAULT_NODE_BUDGET
from burning.settings.instance_source_settings import InstanceSourceSettings

DEFAULT_EXACT_SIZE_CAP: int = 64


class ExperimentSettings:
    """Class defining the settings of a burning experiment."""

    def __init__(self, source: Optional[InstanceSourceSettings] = None):
        """Initialize the ExperimentSettings class."""
        self._source: Optional[InstanceSourceSettings] = None
        self._heuristics: List[HeuristicId] = list(HeuristicId)
        self._repetitions: int = 1
        self._master_seed: int = 0
        self._workers: int = 1
        self._node_budget: int = DEFAULT_NODE_BUDGET
        self._exact_size_cap: int = DEFAULT_EXACT_SIZE_CAP
        self._far_minus_one: bool = False
        self._timing: bool = True
        self._verbose: bool = False
        self._instances_directory: Optional[str] = None
        if source is not None:
            self.set_source(source)

    def set_source(self, source: InstanceSourceSettings) -> "ExperimentSettings":
        """Set the source of the instances."""
        assert isinstance(source, InstanceSourceSettings), f"Invalid instance source: {source!r}"
        self._source = source
        return self

    def set_heuristics(self, names: List[str]) -> "ExperimentSettings":
        """Set the heuristics to run from their command line names."""
        heuristics = [HeuristicId.from_name(name) for name in names]
        if len(heuristics) == 0:
            raise ValueError(
                f"At least one heuristic is required. Available heuristics are {HeuristicId.names()}."
            )
        # Keep the canonical order, drop repeats.
        self._heuristics = [heuristic for heuristic in HeuristicId if heuristic in heuristics]
        return self

    def set_repetitions(self, repetitions: int) -> "ExperimentSettings":
        """Set the number of seeds per instance and heuristic."""
        assert isinstance(repetitions, int) and repetitions >= 1, f"Invalid repetitions: {repetitions}"
        self._repetitions = repetitions
        return self

    def set_master_seed(self, master_seed: int) -> "ExperimentSettings":
        """Set the master seed every instance and run seed derives from."""
        assert isinstance(master_seed, int) and master_seed >= 0, f"Invalid seed: {master_seed}"
        self._master_seed = master_seed
        return self

    def set_workers(self, workers: int) -> "ExperimentSettings":
        """Set the number of worker processes."""
        assert isinstance(workers, int) and workers >= 1, f"Invalid worker count: {workers}"
        self._workers = workers
        return self

    def set_node_budget(self, node_budget: int) -> "ExperimentSettings":
        """Set the number of states the exact search may expand."""
        assert isinstance(node_budget, int) and node_budget >= 1, f"Invalid budget: {node_budget}"
        self._node_budget = node_budget
        return self

    def set_exact_size_cap(self, exact_size_cap: int) -> "ExperimentSettings":
        """Set the largest number of vertices handed to the exact search."""
        assert (
            isinstance(exact_size_cap, int) and exact_size_cap >= 1
        ), f"Invalid size cap: {exact_size_cap}"
        self._exact_size_cap = exact_size_cap
        return self

    def use_far_minus_one(self, far_minus_one: bool = True) -> "ExperimentSettings":
        """Set whether the Far heuristics target the maximum time-to-burn minus one."""
        assert isinstance(far_minus_one, bool)
        self._far_minus_one = far_minus_one
        return self

    def set_timing(self, timing: bool) -> "ExperimentSettings":
        """Set whether wall times are recorded."""
        assert isinstance(timing, bool)
        self._timing = timing
        return self

    def set_verbose(self, verbose: bool) -> "ExperimentSettings":
        """Set the verbosity of the experiment."""
        assert isinstance(verbose, bool)
        self._verbose = verbose
        return self

    def set_instances_directory(self, directory: Optional[str]) -> "ExperimentSettings":
        """Set the directory the burned instances are also written to, as they are loaded."""
        assert directory is None or isinstance(directory, str), f"Invalid directory: {directory!r}"
        self._instances_directory = directory
        return self

    @property
    def source(self) -> InstanceSourceSettings:
        """Return the source of the instances."""
        if self._source is None:
            raise ValueError("No instance source was set.")
        return self._source

    @property
    def heuristics(self) -> List[HeuristicId]:
        """Return the heuristics to run."""
        return list(self._heuristics)

    @property
    def repetitions(self) -> int:
        """Return the number of seeds per instance and heuristic."""
        return self._repetitions

    @property
    def master_seed(self) -> int:
        """Return the master seed."""
        return self._master_seed

    @property
    def workers(self) -> int:
        """Return the number of worker processes."""
        return self._workers

    @property
    def node_budget(self) -> int:
        """Return the exact search budget."""
        return self._node_budget

    @property
    def exact_size_cap(self) -> int:
        """Return the largest number of vertices handed to the exact search."""
        return self._exact_size_cap

    @property
    def far_minus_one(self) -> bool:
        """Return whether the Far heuristics target the maximum minus one."""
        return self._far_minus_one

    @property
    def timing(self) -> bool:
        """Return whether wall times are recorded."""
        return self._timing

    @property
    def verbose(self) -> bool:
        """Return the verbosity of the experiment."""
        return self._verbose

    @property
    def instances_directory(self) -> Optional[str]:
        """Return the directory the burned instances are written to, if any."""
        return self._instances_directory

    def into_dict(self) -> Dict:
        """Return the experiment settings as a dictionary."""
        return {
            "source": self.source.into_dict(),
            "heuristics": [heuristic.value for heuristic in self._heuristics],
            "repetitions": self._repetitions,
            "master_seed": self._master_seed,
            "workers": self._workers,
            "node_budget": self._node_budget,
            "exact_size_cap": self._exact_size_cap,
            "far_minus_one": self._far_minus_one,
            "timing": self._timing,
        }
