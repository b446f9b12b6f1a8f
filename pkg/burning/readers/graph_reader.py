"""Submodule defining the GraphReader interface shared by the file formats."""

from abc import ABC, abstractmethod
from typing import Iterator, Optional, Tuple
import os
from tqdm.auto import tqdm
from burning.graph import Graph


class GraphReader(ABC):
    """Interface for graph file readers."""

    def __init__(self, verbose: bool = False):
        """Initialize the reader."""
        self._verbose: bool = verbose

    @abstractmethod
    def format_name(self) -> str:
        """Return the name of the file format."""

    @abstractmethod
    def parse(self, text: str, name: Optional[str] = None) -> Graph:
        """Return the graph described by the text."""

    def read(self, path: str) -> Graph:
        """Return the graph stored in the file, named after the file stem."""
        with open(path, "r", encoding="utf8") as file:
            text = file.read()
        name = os.path.splitext(os.path.basename(path))[0]
        return self.parse(text, name=name)

    def _lines(self, text: str) -> Iterator[Tuple[int, str]]:
        """Iterate over the non-empty stripped lines with their 1-based numbers."""
        for line_number, line in enumerate(
            tqdm(
                text.splitlines(),
                desc=f"Reading {self.format_name()} lines",
                unit="line",
                dynamic_ncols=True,
                leave=False,
                disable=not self._verbose,
            ),
            start=1,
        ):
            line = line.strip()
            if len(line) == 0:
                continue
            yield line_number, line
