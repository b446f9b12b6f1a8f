"""Settings regarding instances supplied as graph files."""

from typing import Dict, List
import os
from burning.readers import READERS
from burning.settings.instance_source_settings import InstanceSourceSettings
from burning.tasks import InstanceTask


class FileInstancesSettings(InstanceSourceSettings):
    """Class defining the graph files of an experiment."""

    def __init__(self):
        """Initialize the FileInstancesSettings class."""
        self._paths: List[str] = []

    def source_name(self) -> str:
        """Return the name of the instance source."""
        return "files"

    def include_file(self, path: str) -> "FileInstancesSettings":
        """Include a DIMACS, Matrix Market or edge list file."""
        suffix = os.path.splitext(path)[1].lower()
        if suffix not in READERS:
            raise ValueError(
                f"Unknown graph file suffix {suffix!r} for {path}. "
                f"Available suffixes are {sorted(READERS)}."
            )
        if not os.path.isfile(path):
            raise FileNotFoundError(f"Graph file {path} not found.")
        self._paths.append(path)
        return self

    def include_files(self, paths: List[str]) -> "FileInstancesSettings":
        """Include several graph files."""
        for path in paths:
            self.include_file(path)
        return self

    def include_directory(self, directory: str) -> "FileInstancesSettings":
        """Include every graph file of the directory, in name order."""
        if not os.path.isdir(directory):
            raise FileNotFoundError(f"Directory {directory} not found.")
        for file_name in sorted(os.listdir(directory)):
            if os.path.splitext(file_name)[1].lower() in READERS:
                self._paths.append(os.path.join(directory, file_name))
        return self

    @property
    def paths(self) -> List[str]:
        """Return the included graph files."""
        return list(self._paths)

    def tasks(self, master_seed: int) -> List[InstanceTask]:
        """Return one task per included file, indexed in file name order.

        Files included twice are run once, and the inclusion order does not
        change the indices the run seeds derive from.
        """
        unique = {os.path.abspath(path): path for path in self._paths}
        ordered = sorted(unique.items(), key=lambda item: (os.path.basename(item[0]), item[0]))
        return [InstanceTask(index=index, path=path) for index, (_, path) in enumerate(ordered)]

    def into_dict(self) -> Dict:
        """Return the source settings as a dictionary."""
        return {"source": self.source_name(), "paths": self.paths}
