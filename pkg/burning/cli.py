"""Command line interface: generate, burn, exact, stats and bench subcommands.

Exit codes are 0 on success, 1 on input errors and 2 when a heuristic
returns a sequence that fails validation.
"""

from typing import List, Optional
import argparse
import logging
import os
import sys
from tqdm.auto import tqdm
from burning.__version__ import __version__
from burning.exceptions import BurningError, InvalidSequenceError
from burning.experiment import RESULT_FORMATS, Experiment
from burning.generators import generate
from burning.heuristics import HeuristicId
from burning.results import read_results, to_csv_text, to_jsonl_text
from burning.settings import (
    ClusterFamilySettings,
    ExperimentSettings,
    FileInstancesSettings,
    InstanceSourceSettings,
    ThetaFamilySettings,
    family_defaults,
)
from burning.stats import compute_summary
from burning.tasks import write_instance

logger = logging.getLogger(__name__)

FAMILIES: List[str] = ["theta", "cluster"]


def _add_family_arguments(parser: argparse.ArgumentParser) -> None:
    """Add the generator family, count and range options."""
    theta = family_defaults("theta")
    cluster = family_defaults("cluster")
    parser.add_argument("--family", choices=FAMILIES, required=True, help="Generator family.")
    parser.add_argument(
        "--count", type=int, default=None, help="Number of instances, the family default if omitted."
    )
    parser.add_argument("--n-min", type=int, default=theta["n_min"], help="Smallest theta order.")
    parser.add_argument("--n-max", type=int, default=theta["n_max"], help="Largest theta order.")
    parser.add_argument("--k-min", type=int, default=cluster["k_min"], help="Fewest cliques.")
    parser.add_argument("--k-max", type=int, default=cluster["k_max"], help="Most cliques.")
    parser.add_argument("--size-min", type=int, default=cluster["size_min"], help="Smallest clique.")
    parser.add_argument("--size-max", type=int, default=cluster["size_max"], help="Largest clique.")
    parser.add_argument("--d-min", type=int, default=cluster["d_min"], help="Shortest modulator path.")
    parser.add_argument("--d-max", type=int, default=cluster["d_max"], help="Longest modulator path.")


def _add_run_arguments(parser: argparse.ArgumentParser) -> None:
    """Add the options shared by the subcommands running heuristics."""
    parser.add_argument(
        "--heuristics",
        default=",".join(HeuristicId.names()),
        help=f"Comma separated heuristics among {','.join(HeuristicId.names())}.",
    )
    parser.add_argument(
        "--repetitions", type=int, default=1, help="Seeds per instance for randomized heuristics."
    )
    parser.add_argument(
        "--far-minus-one",
        action="store_true",
        help="Far heuristics target the maximum time-to-burn minus one.",
    )


def _add_common_arguments(parser: argparse.ArgumentParser) -> None:
    """Add the seed, worker, timing and verbosity options."""
    parser.add_argument("--seed", type=int, default=0, help="Master seed.")
    parser.add_argument("--workers", type=int, default=1, help="Worker processes.")
    parser.add_argument(
        "--no-timing", action="store_true", help="Leave wall times empty for bit-exact reruns."
    )
    parser.add_argument("--verbose", action="store_true", help="Show progress bars and info logs.")


def build_parser() -> argparse.ArgumentParser:
    """Return the argument parser of the burning command."""
    parser = argparse.ArgumentParser(
        prog="burning", description="Graph burning heuristics, exact solver and benchmarks."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    generate_parser = subparsers.add_parser("generate", help="Write random instances.")
    _add_family_arguments(generate_parser)
    generate_parser.add_argument("--seed", type=int, default=0, help="Master seed.")
    generate_parser.add_argument("--out", required=True, help="Output directory.")
    generate_parser.add_argument("--verbose", action="store_true", help="Show progress bars.")

    burn_parser = subparsers.add_parser("burn", help="Run heuristics on graph files.")
    burn_parser.add_argument("instances", nargs="+", help="Graph files or directories.")
    _add_run_arguments(burn_parser)
    _add_common_arguments(burn_parser)
    burn_parser.add_argument("--format", choices=RESULT_FORMATS, default="csv")
    burn_parser.add_argument("--out", default=None, help="Result file, standard output if omitted.")

    exact_parser = subparsers.add_parser("exact", help="Compute exact burning numbers.")
    exact_parser.add_argument("instances", nargs="+", help="Graph files or directories.")
    _add_common_arguments(exact_parser)
    exact_parser.add_argument("--budget", type=int, default=None, help="Expanded state budget.")
    exact_parser.add_argument("--cap", type=int, default=None, help="Largest vertex count solved.")
    exact_parser.add_argument("--format", choices=RESULT_FORMATS, default="csv")
    exact_parser.add_argument("--out", default=None, help="Result file, standard output if omitted.")

    stats_parser = subparsers.add_parser("stats", help="Summarize a result file.")
    stats_parser.add_argument("records", help="A .csv or .jsonl result file.")
    stats_parser.add_argument("--out", default=None, help="Summary JSON file.")

    bench_parser = subparsers.add_parser("bench", help="Generate, burn and summarize in one pass.")
    _add_family_arguments(bench_parser)
    _add_run_arguments(bench_parser)
    _add_common_arguments(bench_parser)
    bench_parser.add_argument("--out", required=True, help="Output directory.")
    bench_parser.add_argument(
        "--format", choices=RESULT_FORMATS, action="append", default=None, help="Result formats."
    )
    bench_parser.add_argument(
        "--instances-out", default=None, help="Also write the generated instances here."
    )
    return parser


def _family_settings(arguments: argparse.Namespace) -> InstanceSourceSettings:
    """Return the generator family settings described by the arguments."""
    if arguments.family == "theta":
        settings = ThetaFamilySettings().set_vertex_range(arguments.n_min, arguments.n_max)
    else:
        settings = (
            ClusterFamilySettings()
            .set_clique_count_range(arguments.k_min, arguments.k_max)
            .set_clique_size_range(arguments.size_min, arguments.size_max)
            .set_path_size_range(arguments.d_min, arguments.d_max)
        )
    if arguments.count is not None:
        if arguments.count < 0:
            raise ValueError(f"Invalid instance count: {arguments.count}")
        settings.set_count(arguments.count)
    return settings


def _file_settings(paths: List[str]) -> FileInstancesSettings:
    """Return the file source of the given files and directories."""
    settings = FileInstancesSettings()
    for path in paths:
        if os.path.isdir(path):
            settings.include_directory(path)
        else:
            settings.include_file(path)
    return settings


def _experiment_settings(
    arguments: argparse.Namespace, source: InstanceSourceSettings
) -> ExperimentSettings:
    """Return the experiment settings described by the arguments."""
    if arguments.seed < 0:
        raise ValueError(f"Invalid seed: {arguments.seed}")
    if arguments.workers < 1:
        raise ValueError(f"Invalid worker count: {arguments.workers}")
    settings = (
        ExperimentSettings(source)
        .set_master_seed(arguments.seed)
        .set_workers(arguments.workers)
        .set_timing(not arguments.no_timing)
        .set_verbose(arguments.verbose)
    )
    if hasattr(arguments, "heuristics"):
        if arguments.repetitions < 1:
            raise ValueError(f"Invalid repetitions: {arguments.repetitions}")
        names = [name.strip() for name in arguments.heuristics.split(",") if name.strip()]
        settings.set_heuristics(names).set_repetitions(arguments.repetitions)
        settings.use_far_minus_one(arguments.far_minus_one)
    return settings


def _emit(text: str, path: Optional[str]) -> None:
    """Write the text to the file, or to standard output when no path is given."""
    if path is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf8") as file:
        file.write(text)


def _render(experiment: Experiment, result_format: str) -> str:
    """Return the records of the experiment in the given format."""
    if result_format == "csv":
        return to_csv_text(experiment.records)
    return to_jsonl_text(experiment.records)


def run_generate(arguments: argparse.Namespace) -> int:
    """Write each generated instance as an edge list with a metadata sidecar."""
    source = _family_settings(arguments)
    os.makedirs(arguments.out, exist_ok=True)
    for task in tqdm(
        source.tasks(arguments.seed),
        desc=f"Generating {source.source_name()} instances",
        disable=not arguments.verbose,
        leave=False,
        dynamic_ncols=True,
    ):
        write_instance(generate(task.spec), arguments.out)
    logger.info("Wrote %d instances to %s.", source.count, arguments.out)
    return 0


def run_burn(arguments: argparse.Namespace) -> int:
    """Run the heuristics on graph files and write the records."""
    settings = _experiment_settings(arguments, _file_settings(arguments.instances))
    experiment = Experiment.build(settings)
    _emit(_render(experiment, arguments.format), arguments.out)
    return 0


def run_exact(arguments: argparse.Namespace) -> int:
    """Solve graph files exactly and write the records."""
    settings = _experiment_settings(arguments, _file_settings(arguments.instances))
    if arguments.budget is not None:
        if arguments.budget < 1:
            raise ValueError(f"Invalid budget: {arguments.budget}")
        settings.set_node_budget(arguments.budget)
    if arguments.cap is not None:
        if arguments.cap < 1:
            raise ValueError(f"Invalid size cap: {arguments.cap}")
        settings.set_exact_size_cap(arguments.cap)
    experiment = Experiment.build_exact(settings)
    _emit(_render(experiment, arguments.format), arguments.out)
    return 0


def run_stats(arguments: argparse.Namespace) -> int:
    """Print the summary table of a result file and optionally save it as JSON."""
    summary = compute_summary(read_results(arguments.records))
    sys.stdout.write(summary.render() + "\n")
    if arguments.out is not None:
        summary.save(arguments.out)
    return 0


def run_bench(arguments: argparse.Namespace) -> int:
    """Generate a batch, burn it and save records, metadata and summary."""
    source = _family_settings(arguments)
    settings = _experiment_settings(arguments, source).set_instances_directory(
        arguments.instances_out
    )
    experiment = Experiment.build(settings)
    experiment.save(arguments.out, formats=arguments.format or ["csv"])
    sys.stdout.write(experiment.summary().render() + "\n")
    return 0


COMMANDS = {
    "generate": run_generate,
    "burn": run_burn,
    "exact": run_exact,
    "stats": run_stats,
    "bench": run_bench,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Run the command line interface and return its exit code."""
    arguments = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if getattr(arguments, "verbose", False) else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return COMMANDS[arguments.command](arguments)
    except InvalidSequenceError as error:
        sys.stderr.write(f"Internal error: {error}\n")
        for violation in error.violations:
            sys.stderr.write(f"  {violation}\n")
        return 2
    except (BurningError, OSError, ValueError) as error:
        sys.stderr.write(f"Error: {error}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
