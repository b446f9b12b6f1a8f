"""Submodule providing the Experiment class, the results of burning a set of instances."""

from dataclasses import dataclass
from multiprocessing import Pool
from time import perf_counter
from typing import Callable, Dict, List, Optional, Sequence, Tuple
import os
import logging
import pandas as pd
import compress_json
from tqdm.auto import tqdm
from burning.__version__ import __version__
from burning.burn_model import validate_sequence
from burning.exceptions import BudgetExceededError, InvalidSequenceError
from burning.generators import derive_seed
from burning.heuristics import HeuristicId, run_heuristic
from burning.oracle import attach_bound, exact_bn
from burning.results import (
    ResultRecord,
    read_results,
    records_to_dataframe,
    sort_records,
    to_csv_text,
    to_jsonl_text,
)
from burning.settings import ExperimentSettings
from burning.stats import SummaryStats, compute_summary
from burning.tasks import InstanceTask, write_instance

logger = logging.getLogger(__name__)

EXACT_HEURISTIC_NAME: str = "exact"
BUDGET_EXCEEDED_NAME: str = f"{EXACT_HEURISTIC_NAME}:budget-exceeded"
SIZE_CAP_NAME: str = f"{EXACT_HEURISTIC_NAME}:size-cap"
RESULT_FORMATS: Tuple[str, ...] = ("csv", "jsonl")


def run_seed(master_seed: int, task_index: int, heuristic: HeuristicId, repetition: int) -> int:
    """Return the seed of one run, a function of its coordinates only."""
    return derive_seed(master_seed, task_index, list(HeuristicId).index(heuristic), repetition)


@dataclass(frozen=True)
class BurnJob:
    """The heuristic runs of one instance."""

    task: InstanceTask
    heuristics: Tuple[HeuristicId, ...]
    repetitions: int
    master_seed: int
    far_minus_one: bool
    timing: bool
    instances_directory: Optional[str] = None


@dataclass(frozen=True)
class ExactJob:
    """The exact solve of one instance."""

    task: InstanceTask
    node_budget: int
    exact_size_cap: int
    timing: bool


def burn_instance(job: BurnJob) -> List[ResultRecord]:
    """Return the validated records of every heuristic run on the instance."""
    instance = job.task.load()
    if job.instances_directory is not None:
        write_instance(instance, job.instances_directory)
    graph = instance.graph
    bound = attach_bound(graph, instance.name, instance.metadata)
    records: List[ResultRecord] = []
    for heuristic in job.heuristics:
        repetitions = job.repetitions if heuristic.is_randomized() else 1
        for repetition in range(repetitions):
            seed = run_seed(job.master_seed, job.task.index, heuristic, repetition)
            run = run_heuristic(graph, heuristic, seed, far_minus_one=job.far_minus_one)
            validation = validate_sequence(graph, run.sequence.activators, run.length)
            if not validation:
                raise InvalidSequenceError(
                    f"{heuristic.value} with seed {seed} returned an invalid sequence "
                    f"of length {run.length} on {instance.name}.",
                    validation.report(),
                )
            records.append(
                ResultRecord.build(
                    instance_name=instance.name,
                    graph=graph,
                    heuristic=heuristic.value,
                    seed=seed,
                    length_found=run.length,
                    bound=bound,
                    wall_time_ms=1000 * run.wall_time if job.timing else None,
                    activators=run.sequence.activators,
                )
            )
    return records


def solve_instance(job: ExactJob) -> List[ResultRecord]:
    """Return the exact record of the instance.

    Rows whose search was skipped by the size cap or abandoned past the
    budget have no length and name the limit in their heuristic column.
    """
    instance = job.task.load()
    graph = instance.graph
    started = perf_counter()
    length: Optional[int] = None
    outcome = EXACT_HEURISTIC_NAME
    if graph.vertex_count > job.exact_size_cap:
        logger.warning(
            "Skipping the exact search on %s: %d vertices above the cap of %d.",
            instance.name,
            graph.vertex_count,
            job.exact_size_cap,
        )
        outcome = SIZE_CAP_NAME
    else:
        try:
            length = exact_bn(graph, node_budget=job.node_budget)
        except BudgetExceededError as error:
            logger.warning("Exact search on %s abandoned: %s", instance.name, error)
            outcome = BUDGET_EXCEEDED_NAME
    return [
        ResultRecord.build(
            instance_name=instance.name,
            graph=graph,
            heuristic=outcome,
            seed=None,
            length_found=length,
            bound=attach_bound(graph, instance.name, instance.metadata),
            wall_time_ms=1000 * (perf_counter() - started) if job.timing else None,
        )
    ]


def _execute(
    function: Callable[[object], List[ResultRecord]],
    jobs: Sequence[object],
    workers: int,
    description: str,
    verbose: bool,
) -> List[ResultRecord]:
    """Return the records of every job, computed in a pool of workers when more than one."""
    records: List[ResultRecord] = []
    if workers == 1 or len(jobs) <= 1:
        for job in tqdm(
            jobs,
            desc=description,
            disable=not verbose,
            leave=False,
            dynamic_ncols=True,
        ):
            records.extend(function(job))
        return records

    with Pool(processes=min(workers, len(jobs))) as pool:
        for batch in tqdm(
            pool.imap_unordered(function, jobs),
            total=len(jobs),
            desc=description,
            disable=not verbose,
            leave=False,
            dynamic_ncols=True,
        ):
            records.extend(batch)
    return records


class Experiment:
    """Class representing the results of an experiment."""

    def __init__(self, records: pd.DataFrame, metadata: Dict):
        """Initialize the Experiment class."""
        self._records: pd.DataFrame = records
        self._metadata: Dict = metadata

    @property
    def records(self) -> pd.DataFrame:
        """Return the result rows sorted by instance, heuristic and seed."""
        return self._records

    @property
    def metadata(self) -> Dict:
        """Return the settings and version the experiment ran with."""
        return self._metadata

    def summary(self) -> SummaryStats:
        """Return the summary statistics of the heuristic rows."""
        return compute_summary(self._records)

    def save(self, path: str, formats: Sequence[str] = ("csv",)) -> None:
        """Save the records, the metadata and the summary to the directory."""
        for result_format in formats:
            if result_format not in RESULT_FORMATS:
                raise ValueError(
                    f"Format {result_format} not found. "
                    f"Available formats are {list(RESULT_FORMATS)}."
                )
        os.makedirs(path, exist_ok=True)
        for result_format in formats:
            if result_format == "csv":
                text = to_csv_text(self._records)
            else:
                text = to_jsonl_text(self._records)
            with open(os.path.join(path, f"records.{result_format}"), "w", encoding="utf8") as file:
                file.write(text)
        compress_json.dump(self._metadata, os.path.join(path, "metadata.json"))
        self.summary().save(os.path.join(path, "summary.json"))

    @staticmethod
    def load(path: str) -> "Experiment":
        """Load an experiment saved with `save`."""
        for result_format in RESULT_FORMATS:
            records_path = os.path.join(path, f"records.{result_format}")
            if os.path.exists(records_path):
                break
        else:
            raise FileNotFoundError(f"No records.csv or records.jsonl found in {path}.")
        metadata_path = os.path.join(path, "metadata.json")
        metadata = compress_json.load(metadata_path) if os.path.exists(metadata_path) else {}
        return Experiment(records=read_results(records_path), metadata=metadata)

    @staticmethod
    def _from_records(
        records: List[ResultRecord], settings: ExperimentSettings, mode: str
    ) -> "Experiment":
        """Return the experiment of the records."""
        metadata = settings.into_dict()
        metadata["mode"] = mode
        metadata["version"] = __version__
        return Experiment(records=sort_records(records_to_dataframe(records)), metadata=metadata)

    @staticmethod
    def build(settings: ExperimentSettings) -> "Experiment":
        """Run every configured heuristic on every instance of the source."""
        assert isinstance(settings, ExperimentSettings)
        jobs = [
            BurnJob(
                task=task,
                heuristics=tuple(settings.heuristics),
                repetitions=settings.repetitions,
                master_seed=settings.master_seed,
                far_minus_one=settings.far_minus_one,
                timing=settings.timing,
                instances_directory=settings.instances_directory,
            )
            for task in settings.source.tasks(settings.master_seed)
        ]
        records = _execute(
            burn_instance,
            jobs,
            workers=settings.workers,
            description="Burning instances",
            verbose=settings.verbose,
        )
        return Experiment._from_records(records, settings, mode="burn")

    @staticmethod
    def build_exact(settings: ExperimentSettings) -> "Experiment":
        """Compute the exact burning number of every instance of the source."""
        assert isinstance(settings, ExperimentSettings)
        jobs = [
            ExactJob(
                task=task,
                node_budget=settings.node_budget,
                exact_size_cap=settings.exact_size_cap,
                timing=settings.timing,
            )
            for task in settings.source.tasks(settings.master_seed)
        ]
        records = _execute(
            solve_instance,
            jobs,
            workers=settings.workers,
            description="Solving instances exactly",
            verbose=settings.verbose,
        )
        return Experiment._from_records(records, settings, mode="exact")
