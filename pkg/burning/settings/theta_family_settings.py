"""Settings regarding batches of random theta graphs."""

from typing import Dict, List
from burning.generators import ThetaRange
from burning.settings.family_defaults import family_defaults
from burning.settings.instance_source_settings import InstanceSourceSettings
from burning.tasks import InstanceTask


class ThetaFamilySettings(InstanceSourceSettings):
    """Class defining a batch of random theta graphs."""

    def __init__(self):
        """Initialize the ThetaFamilySettings class with the default protocol."""
        defaults = family_defaults("theta")
        self._count: int = defaults["count"]
        self._n_min: int = defaults["n_min"]
        self._n_max: int = defaults["n_max"]

    def source_name(self) -> str:
        """Return the name of the instance source."""
        return "theta"

    def set_count(self, count: int) -> "ThetaFamilySettings":
        """Set the number of instances of the batch."""
        assert isinstance(count, int) and count >= 0, f"Invalid instance count: {count}"
        self._count = count
        return self

    def set_vertex_range(self, n_min: int, n_max: int) -> "ThetaFamilySettings":
        """Set the range of the number of vertices."""
        ThetaRange(n_min, n_max)
        self._n_min = n_min
        self._n_max = n_max
        return self

    @property
    def count(self) -> int:
        """Return the number of instances of the batch."""
        return self._count

    def family_range(self) -> ThetaRange:
        """Return the parameter range of the batch."""
        return ThetaRange(self._n_min, self._n_max)

    def tasks(self, master_seed: int) -> List[InstanceTask]:
        """Return one task per instance of the batch."""
        family = self.family_range()
        return [
            InstanceTask(index=index, spec=family.spec_at(index, master_seed))
            for index in range(self._count)
        ]

    def into_dict(self) -> Dict:
        """Return the source settings as a dictionary."""
        return {"source": self.source_name(), "count": self._count, **self.family_range().into_dict()}
