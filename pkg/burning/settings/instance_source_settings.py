"""Submodule defining the Instance Source Settings interface."""

from abc import ABC, abstractmethod
from typing import Dict, List
from burning.tasks import InstanceTask


class InstanceSourceSettings(ABC):
    """Interface for the sources of the instances of an experiment."""

    @abstractmethod
    def source_name(self) -> str:
        """Return the name of the instance source."""

    @abstractmethod
    def tasks(self, master_seed: int) -> List[InstanceTask]:
        """Return the instances to run, indexed from zero."""

    @abstractmethod
    def into_dict(self) -> Dict:
        """Return the source settings as a dictionary."""
