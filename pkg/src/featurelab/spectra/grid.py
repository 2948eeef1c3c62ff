"""Discrete wavelength grid of a spectral sensor."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import WavelengthRangeError

DEFAULT_START_NM = 400.0
DEFAULT_STEP_NM = 2.2
DEFAULT_COUNT = 272


@dataclass(frozen=True)
class BandGrid:
    """Uniform wavelength grid: band i sits at ``start_nm + i * step_nm``."""

    start_nm: float
    step_nm: float
    count: int

    def __post_init__(self):
        if self.step_nm <= 0:
            raise ValueError(f"step_nm must be positive, got {self.step_nm}")
        if self.count < 1:
            raise ValueError(f"count must be >= 1, got {self.count}")

    @property
    def end_nm(self) -> float:
        return self.start_nm + (self.count - 1) * self.step_nm

    def wavelength(self, index: int) -> float:
        if not 0 <= index < self.count:
            raise IndexError(f"band index {index} outside [0, {self.count})")
        return self.start_nm + index * self.step_nm

    def wavelengths(self) -> np.ndarray:
        return self.start_nm + self.step_nm * np.arange(self.count)


def default_grid() -> BandGrid:
    """The 272-band visible/NIR grid, 400.0 nm to 996.2 nm in 2.2 nm steps."""
    return BandGrid(DEFAULT_START_NM, DEFAULT_STEP_NM, DEFAULT_COUNT)


def nearest_band(grid: BandGrid, wavelength_nm: float) -> int:
    """Index of the band closest to ``wavelength_nm``, ties toward the lower index.

    Wavelengths more than half a step beyond either end of the grid are
    rejected rather than silently clamped.
    """
    half = grid.step_nm / 2.0
    if wavelength_nm < grid.start_nm - half or wavelength_nm > grid.end_nm + half:
        raise WavelengthRangeError(
            f"wavelength {wavelength_nm} nm outside grid "
            f"[{grid.start_nm}, {grid.end_nm}] nm (+/- {half} nm)"
        )
    raw = (wavelength_nm - grid.start_nm) / grid.step_nm
    lower = int(np.floor(raw))
    lower = max(0, min(lower, grid.count - 1))
    upper = min(lower + 1, grid.count - 1)
    # tie (equidistant) resolves to the lower index
    if abs(wavelength_nm - grid.wavelength(upper)) < abs(wavelength_nm - grid.wavelength(lower)):
        return upper
    return lower
