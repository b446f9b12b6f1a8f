"""Data class holding a generated or loaded instance."""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple
from burning.graph import Graph


@dataclass(frozen=True)
class Instance:
    """A named graph with its generation metadata."""

    name: str
    graph: Graph
    metadata: Dict[str, Any] = field(default_factory=dict)
    modulator: Optional[Tuple[int, ...]] = None
