"""Submodule providing the canonical instance names of generated graphs."""

import re
from typing import Dict, Optional

THETA_PATTERN = re.compile(r"^theta(\d+)-(\d+)-(\d+)-(\d+)$")
CLUSTER_PATTERN = re.compile(r"^cluster(\d+)-(\d+)-(\d+)-(\d+)-(\d+)-(\d+)$")


def theta_name(vertex_count: int, sample: int, cycle_size: int, path_internal: int) -> str:
    """Return the name theta<n>-<sample>-<m>-<l>."""
    return f"theta{vertex_count}-{sample}-{cycle_size}-{path_internal}"


def cluster_name(
    clique_count: int,
    size_min: int,
    size_max: int,
    path_vertices: int,
    vertex_count: int,
    sample: int,
) -> str:
    """Return the name cluster<k>-<nmin>-<nmax>-<d>-<n>-<sample>, sample zero padded."""
    return (
        f"cluster{clique_count}-{size_min}-{size_max}-"
        f"{path_vertices}-{vertex_count}-{sample:04d}"
    )


def parse_instance_name(name: str) -> Optional[Dict[str, int]]:
    """Return the parameters encoded in a generated instance name, None otherwise."""
    match = THETA_PATTERN.match(name)
    if match is not None:
        n, sample, m, l = (int(group) for group in match.groups())
        if n != m + l:
            return None
        return {"family": "theta", "n": n, "sample": sample, "m": m, "l": l}

    match = CLUSTER_PATTERN.match(name)
    if match is not None:
        k, size_min, size_max, d, n, sample = (int(group) for group in match.groups())
        return {
            "family": "cluster",
            "k": k,
            "size_min": size_min,
            "size_max": size_max,
            "d": d,
            "n": n,
            "sample": sample,
        }
    return None
