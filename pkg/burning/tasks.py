"""Submodule providing the unit of work of an experiment: one instance to load."""

from dataclasses import dataclass
from typing import Any, Dict, Optional
import os
import logging
import compress_json
from burning.generators import GeneratorSpec, Instance, generate
from burning.readers import read_graph, write_edge_list

logger = logging.getLogger(__name__)


def sidecar_path(path: str) -> str:
    """Return the metadata sidecar path of a graph file, <stem>.json."""
    return os.path.splitext(path)[0] + ".json"


def instance_name_of(path: str) -> str:
    """Return the instance name of a graph file, its file name without suffix."""
    return os.path.splitext(os.path.basename(path))[0]


@dataclass(frozen=True)
class InstanceTask:
    """An instance of an experiment, either a graph file or a generator spec."""

    index: int
    path: Optional[str] = None
    spec: Optional[GeneratorSpec] = None

    def __post_init__(self):
        """Check that exactly one source is given."""
        assert (self.path is None) != (
            self.spec is None
        ), f"Task {self.index} needs exactly one of a path or a generator spec."

    def load(self, verbose: bool = False) -> Instance:
        """Return the instance, reading the sidecar metadata of files when present."""
        if self.spec is not None:
            return generate(self.spec)

        graph = read_graph(self.path, verbose=verbose)
        metadata: Dict[str, Any] = {}
        if os.path.exists(sidecar_path(self.path)):
            metadata = compress_json.load(sidecar_path(self.path))
            logger.debug("Loaded metadata sidecar of %s.", self.path)
        modulator = metadata.get("modulator")
        return Instance(
            name=metadata.get("name", instance_name_of(self.path)),
            graph=graph,
            metadata=metadata,
            modulator=tuple(modulator) if modulator is not None else None,
        )


def write_instance(instance: Instance, directory: str) -> str:
    """Write <name>.edges and its <name>.json metadata sidecar, returning the graph path."""
    os.makedirs(directory, exist_ok=True)
    path = os.path.join(directory, f"{instance.name}.edges")
    with open(path, "w", encoding="utf8") as file:
        file.write(write_edge_list(instance.graph))
    metadata = dict(instance.metadata)
    metadata["name"] = instance.name
    if instance.modulator is not None:
        metadata["modulator"] = list(instance.modulator)
    compress_json.dump(metadata, sidecar_path(path))
    return path
