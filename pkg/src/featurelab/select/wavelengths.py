"""Trace selected index features back to the wavelengths they consume."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import ceil, floor

import numpy as np

from ..spectra.expressions import Band, BinOp, Neg, Node
from ..spectra.registry import IndexRegistry
from .pipeline import FeatureSet

RANGE_LO_NM = 400.0
RANGE_HI_NM = 900.0


@dataclass
class WavelengthHistogram:
    bin_edges: np.ndarray
    counts: np.ndarray
    overflow: int  # references above the 900 nm display range
    underflow: int  # references below 400 nm (unusual but conserved)
    absent_features: list[str] = field(default_factory=list)

    @property
    def total_references(self) -> int:
        return int(self.counts.sum()) + self.overflow + self.underflow


def _occurrences(node: Node, out: list[float]) -> None:
    if isinstance(node, Band):
        out.append(node.wavelength_nm)
    elif isinstance(node, Neg):
        _occurrences(node.operand, out)
    elif isinstance(node, BinOp):
        _occurrences(node.left, out)
        _occurrences(node.right, out)


def wavelength_histogram(
    feature_set: FeatureSet,
    registry: IndexRegistry,
    bin_width_nm: float = 2.2,
    count_repeats: bool = False,
) -> WavelengthHistogram:
    """Usage frequency of raw wavelengths across the selected indices.

    Each distinct wavelength of a selected index contributes one count
    (set ``count_repeats`` to count every terminal occurrence instead).
    Bins are uniform over 400-900 nm; references beyond 900 nm go to an
    overflow bucket so nothing is silently dropped. Selected features
    missing from the registry contribute nothing and are reported.
    """
    if bin_width_nm <= 0:
        raise ValueError(f"bin width must be positive, got {bin_width_nm}")
    n_bins = ceil((RANGE_HI_NM - RANGE_LO_NM) / bin_width_nm)
    edges = RANGE_LO_NM + bin_width_nm * np.arange(n_bins + 1)
    counts = np.zeros(n_bins, dtype=int)
    overflow = underflow = 0
    absent = []

    for name in feature_set.selected:
        definition = registry.get(name)
        if definition is None:
            absent.append(name)
            continue
        if count_repeats:
            wavelengths: list[float] = []
            _occurrences(definition.expression, wavelengths)
        else:
            wavelengths = list(definition.wavelengths_used)
        for nm in wavelengths:
            if nm < RANGE_LO_NM:
                underflow += 1
            elif nm > RANGE_HI_NM:
                overflow += 1
            else:
                counts[min(floor((nm - RANGE_LO_NM) / bin_width_nm), n_bins - 1)] += 1

    return WavelengthHistogram(
        bin_edges=edges,
        counts=counts,
        overflow=overflow,
        underflow=underflow,
        absent_features=absent,
    )
