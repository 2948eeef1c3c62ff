"""Named index definitions and the registry file format.

A registry file is plain text, one record per line::

    # comment
    NDVI = (R800 - R670) / (R800 + R670)

Names must be unique. The packaged default registry ships 36 widely used
vegetation indices restricted to the formula grammar (no roots or logs).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from typing import IO, Iterable

from ..errors import IngestError, WavelengthRangeError
from . import expressions as ex
from .grid import BandGrid, nearest_band


@dataclass(frozen=True)
class IndexDefinition:
    name: str
    expression: ex.Node
    wavelengths_used: tuple[float, ...]

    def bind(self, grid: BandGrid) -> dict[float, int]:
        """Map every referenced wavelength to its grid band index."""
        binding = {}
        for nm in self.wavelengths_used:
            try:
                binding[nm] = nearest_band(grid, nm)
            except WavelengthRangeError as err:
                raise WavelengthRangeError(f"index {self.name!r}: {err}") from None
        return binding

    def text(self) -> str:
        return ex.serialize(self.expression)


def parse_index_expression(text: str, name: str = "") -> IndexDefinition:
    """Parse formula text into a definition with its wavelength set extracted."""
    node = ex.parse_expression(text)
    return IndexDefinition(
        name=name,
        expression=node,
        wavelengths_used=tuple(ex.wavelengths_of(node)),
    )


@dataclass
class IndexRegistry:
    definitions: list[IndexDefinition] = field(default_factory=list)

    def __post_init__(self):
        names = [d.name for d in self.definitions]
        if len(set(names)) != len(names):
            dupes = sorted({n for n in names if names.count(n) > 1})
            raise ValueError(f"duplicate index names: {', '.join(dupes)}")

    def __len__(self) -> int:
        return len(self.definitions)

    def names(self) -> list[str]:
        return [d.name for d in self.definitions]

    def get(self, name: str) -> IndexDefinition | None:
        for d in self.definitions:
            if d.name == name:
                return d
        return None


def parse_registry_lines(lines: Iterable[str]) -> IndexRegistry:
    definitions = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise IngestError(f"registry line {lineno}: expected 'name = expression'")
        name, _, formula = line.partition("=")
        name = name.strip()
        if not name:
            raise IngestError(f"registry line {lineno}: empty index name")
        try:
            definitions.append(parse_index_expression(formula.strip(), name=name))
        except Exception as err:
            raise IngestError(f"registry line {lineno} ({name}): {err}") from err
    return IndexRegistry(definitions)


def load_registry(source: str | IO[str]) -> IndexRegistry:
    """Load from a path or an open text stream."""
    if isinstance(source, str):
        with open(source, encoding="utf-8") as fh:
            return parse_registry_lines(fh)
    return parse_registry_lines(source)


def save_registry(registry: IndexRegistry, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for d in registry.definitions:
            fh.write(f"{d.name} = {d.text()}\n")


def default_registry() -> IndexRegistry:
    """The packaged 36-index registry."""
    text = resources.files(__package__).joinpath("data/default_indices.txt").read_text("utf-8")
    return parse_registry_lines(text.splitlines())
