"""Histograms and Gaussian kernel density estimates (1-D and 2-D)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

GridSpec = tuple[float, float, int]

SQRT_2PI = float(np.sqrt(2.0 * np.pi))


@dataclass
class Histogram:
    edges: np.ndarray  # bin_count + 1 monotone edges
    counts: np.ndarray  # per-bin occupancy
    out_of_range: int = 0

    @property
    def bin_count(self) -> int:
        return len(self.counts)


@dataclass
class DensityEstimate:
    """Density values on a rectangular evaluation grid.

    ``axes`` holds one point vector per dimension; ``densities`` has shape
    ``(len(axes[0]),)`` in 1-D or ``(len(axes[0]), len(axes[1]))`` in 2-D.
    """

    axes: list[np.ndarray]
    densities: np.ndarray
    bandwidth: tuple[float, ...]

    @property
    def dims(self) -> int:
        return len(self.axes)

    def trapezoid_integral(self) -> float:
        if self.dims == 1:
            return float(np.trapezoid(self.densities, self.axes[0]))
        inner = np.trapezoid(self.densities, self.axes[1], axis=1)
        return float(np.trapezoid(inner, self.axes[0]))


def histogram(
    values: np.ndarray,
    bin_count: int,
    value_range: Optional[tuple[float, float]] = None,
) -> Histogram:
    """Uniform-bin histogram; values equal to the upper edge land in the last bin.

    Without an explicit range the data min/max is used; if all values are
    identical that degenerate range is widened by +/- 0.5 so a single bin
    holds everything. Out-of-range values are counted, not binned.
    """
    values = np.asarray(values, dtype=float)
    if values.size == 0:
        raise ValueError("histogram input is empty")
    if bin_count < 1:
        raise ValueError(f"bin_count must be >= 1, got {bin_count}")
    if value_range is None:
        lo, hi = float(values.min()), float(values.max())
        if lo == hi:
            lo, hi = lo - 0.5, hi + 0.5
    else:
        lo, hi = float(value_range[0]), float(value_range[1])
        if lo >= hi:
            raise ValueError(f"invalid range: lo={lo} must be below hi={hi}")

    edges = np.linspace(lo, hi, bin_count + 1)
    in_range = (values >= lo) & (values <= hi)
    width = (hi - lo) / bin_count
    idx = np.floor((values[in_range] - lo) / width).astype(int)
    idx = np.minimum(idx, bin_count - 1)  # upper edge folds into the last bin
    counts = np.bincount(idx, minlength=bin_count)
    return Histogram(edges=edges, counts=counts, out_of_range=int((~in_range).sum()))


def silverman_bandwidth(column: np.ndarray) -> float:
    """1.06 * sigma * n^(-1/5), floored away from zero.

    The floor is 1e-9 of the data range; fully degenerate data (zero
    range) falls back to an absolute 1e-9 so the kernel stays defined.
    """
    column = np.asarray(column, dtype=float)
    n = len(column)
    sigma = float(np.std(column, ddof=1)) if n >= 2 else 0.0
    h = 1.06 * sigma * n ** (-1 / 5)
    span = float(column.max() - column.min()) if n else 0.0
    h = max(h, 1e-9 * span)
    return h if h > 0 else 1e-9


def _normalize_points(points: np.ndarray) -> np.ndarray:
    pts = np.asarray(points, dtype=float)
    if pts.ndim == 1:
        pts = pts[:, None]
    if pts.ndim != 2 or pts.shape[1] not in (1, 2):
        raise ValueError("points must be a 1- or 2-column matrix")
    if pts.shape[0] < 1:
        raise ValueError("need at least one point")
    return pts


def _axis(spec: GridSpec) -> np.ndarray:
    lo, hi, count = spec
    if count < 1:
        raise ValueError(f"grid count must be >= 1, got {count}")
    return np.linspace(float(lo), float(hi), int(count))


def kde(
    points: np.ndarray,
    eval_grid: GridSpec | Sequence[GridSpec],
    bandwidth: Optional[Sequence[float]] = None,
) -> DensityEstimate:
    """Gaussian product-kernel density on a rectangular grid.

    density(g) = (1/n) * sum_s prod_dim phi((g - s) / h) / h

    Bandwidth defaults to Silverman's rule per dimension and can be
    overridden per call (must be positive).
    """
    pts = _normalize_points(points)
    n, dims = pts.shape

    if dims == 1 and not isinstance(eval_grid[0], (tuple, list)):
        specs = [tuple(eval_grid)]
    else:
        specs = [tuple(s) for s in eval_grid]
    if len(specs) != dims:
        raise ValueError(f"{dims}-D points need {dims} grid spec(s), got {len(specs)}")
    axes = [_axis(s) for s in specs]

    if bandwidth is None:
        h = tuple(silverman_bandwidth(pts[:, j]) for j in range(dims))
    else:
        h = tuple(float(b) for b in bandwidth)
        if len(h) != dims:
            raise ValueError(f"{dims}-D points need {dims} bandwidth(s)")
        if any(b <= 0 for b in h):
            raise ValueError(f"bandwidth must be positive, got {h}")

    # per-dimension kernel factor matrices (grid x points); the product
    # kernel then reduces to a matrix product
    factors = []
    for j in range(dims):
        u = (axes[j][:, None] - pts[None, :, j]) / h[j]
        factors.append(np.exp(-0.5 * u**2) / (SQRT_2PI * h[j]))
    if dims == 1:
        densities = factors[0].mean(axis=1)
    else:
        densities = factors[0] @ factors[1].T / n
    return DensityEstimate(axes=axes, densities=densities, bandwidth=h)


def padded_grid(
    points: np.ndarray,
    count: int,
    bandwidth: Optional[Sequence[float]] = None,
    pad_bandwidths: float = 4.0,
) -> list[GridSpec]:
    """Per-dimension grid specs spanning the data plus a bandwidth margin.

    On such a grid the density integrates to ~1, which is what callers
    rendering or sanity-checking an estimate want.
    """
    pts = _normalize_points(points)
    specs = []
    for j in range(pts.shape[1]):
        h = bandwidth[j] if bandwidth is not None else silverman_bandwidth(pts[:, j])
        lo = float(pts[:, j].min()) - pad_bandwidths * h
        hi = float(pts[:, j].max()) + pad_bandwidths * h
        specs.append((lo, hi, count))
    return specs
