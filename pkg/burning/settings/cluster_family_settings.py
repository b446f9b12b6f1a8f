"""Settings regarding batches of random graphs with a path modulator."""

from typing import Dict, List
from burning.generators import ClusterRange
from burning.settings.family_defaults import family_defaults
from burning.settings.instance_source_settings import InstanceSourceSettings
from burning.tasks import InstanceTask


class ClusterFamilySettings(InstanceSourceSettings):
    """Class defining a batch of random graphs at known distance to cluster."""

    def __init__(self):
        """Initialize the ClusterFamilySettings class with the default protocol."""
        defaults = family_defaults("cluster")
        self._count: int = defaults["count"]
        self._k_min: int = defaults["k_min"]
        self._k_max: int = defaults["k_max"]
        self._size_min: int = defaults["size_min"]
        self._size_max: int = defaults["size_max"]
        self._d_min: int = defaults["d_min"]
        self._d_max: int = defaults["d_max"]

    def source_name(self) -> str:
        """Return the name of the instance source."""
        return "cluster"

    def set_count(self, count: int) -> "ClusterFamilySettings":
        """Set the number of instances of the batch."""
        assert isinstance(count, int) and count >= 0, f"Invalid instance count: {count}"
        self._count = count
        return self

    def set_clique_count_range(self, k_min: int, k_max: int) -> "ClusterFamilySettings":
        """Set the range of the number of cliques."""
        ClusterRange(k_min, k_max, self._size_min, self._size_max, self._d_min, self._d_max)
        self._k_min, self._k_max = k_min, k_max
        return self

    def set_clique_size_range(self, size_min: int, size_max: int) -> "ClusterFamilySettings":
        """Set the range of the clique sizes."""
        ClusterRange(self._k_min, self._k_max, size_min, size_max, self._d_min, self._d_max)
        self._size_min, self._size_max = size_min, size_max
        return self

    def set_path_size_range(self, d_min: int, d_max: int) -> "ClusterFamilySettings":
        """Set the range of the number of path vertices."""
        ClusterRange(self._k_min, self._k_max, self._size_min, self._size_max, d_min, d_max)
        self._d_min, self._d_max = d_min, d_max
        return self

    @property
    def count(self) -> int:
        """Return the number of instances of the batch."""
        return self._count

    def family_range(self) -> ClusterRange:
        """Return the parameter ranges of the batch."""
        return ClusterRange(
            k_min=self._k_min,
            k_max=self._k_max,
            size_min=self._size_min,
            size_max=self._size_max,
            d_min=self._d_min,
            d_max=self._d_max,
        )

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
