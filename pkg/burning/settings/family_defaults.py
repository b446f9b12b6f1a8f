"""Submodule loading the default generator protocols shipped with the package."""

from typing import Any, Dict, List
import compress_json


def family_defaults(family: str) -> Dict[str, Any]:
    """Return the default count and ranges of a generator family."""
    families: List[Dict[str, Any]] = compress_json.local_load("families.json")
    for defaults in families:
        if defaults["family"] == family:
            return defaults
    raise ValueError(
        f"Family {family} not found. "
        f"Available families are {[defaults['family'] for defaults in families]}."
    )
