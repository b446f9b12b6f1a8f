"""Submodule with settings for burning experiments."""

from burning.settings.instance_source_settings import InstanceSourceSettings
from burning.settings.file_instances_settings import FileInstancesSettings
from burning.settings.theta_family_settings import ThetaFamilySettings
from burning.settings.cluster_family_settings import ClusterFamilySettings
from burning.settings.family_defaults import family_defaults
from burning.settings.experiment_settings import DEFAULT_EXACT_SIZE_CAP, ExperimentSettings

__all__ = [
    "InstanceSourceSettings",
    "FileInstancesSettings",
    "ThetaFamilySettings",
    "ClusterFamilySettings",
    "ExperimentSettings",
    "family_defaults",
    "DEFAULT_EXACT_SIZE_CAP",
]
