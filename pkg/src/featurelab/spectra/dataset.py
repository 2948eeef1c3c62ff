"""Core data containers: spectral samples and the samples-by-features table."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .grid import BandGrid


@dataclass
class SpectralSample:
    """One measured spectrum plus, optionally, its ground-truth target."""

    sample_id: str
    reflectance: np.ndarray
    target: Optional[float] = None

    def __post_init__(self):
        self.reflectance = np.asarray(self.reflectance, dtype=float)
        if self.reflectance.ndim != 1:
            raise ValueError("reflectance must be a 1-D vector")


@dataclass
class SpectralDataset:
    grid: BandGrid
    samples: list[SpectralSample] = field(default_factory=list)
    name: str = "dataset"

    def __post_init__(self):
        seen = set()
        for s in self.samples:
            if len(s.reflectance) != self.grid.count:
                raise ValueError(
                    f"sample {s.sample_id!r} has {len(s.reflectance)} bands, "
                    f"grid expects {self.grid.count}"
                )
            if s.sample_id in seen:
                raise ValueError(f"duplicate sample_id {s.sample_id!r}")
            seen.add(s.sample_id)

    def __len__(self) -> int:
        return len(self.samples)

    def reflectance_matrix(self) -> np.ndarray:
        return np.vstack([s.reflectance for s in self.samples])


@dataclass
class FeatureTable:
    """n x d feature matrix with an aligned target vector.

    The unit of all downstream statistics and modeling. Construction
    enforces the shape contract; no missing values are allowed here, rows
    with gaps must be dropped (and counted) by the ingestion layer.
    """

    feature_names: list[str]
    values: np.ndarray
    target: np.ndarray
    target_name: str = "target"

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        self.target = np.asarray(self.target, dtype=float)
        if self.values.ndim != 2:
            raise ValueError("values must be a 2-D matrix")
        n, d = self.values.shape
        if d != len(self.feature_names):
            raise ValueError(f"{len(self.feature_names)} names for {d} columns")
        if len(self.target) != n:
            raise ValueError("target length must match row count")
        if n < 2:
            raise ValueError(f"need at least 2 rows, got {n}")
        if d < 1:
            raise ValueError("need at least 1 feature column")
        if len(set(self.feature_names)) != d:
            raise ValueError("feature names must be unique")
        if not np.isfinite(self.values).all() or not np.isfinite(self.target).all():
            raise ValueError("table contains missing or non-finite cells")

    @property
    def n(self) -> int:
        return self.values.shape[0]

    @property
    def d(self) -> int:
        return self.values.shape[1]

    def column(self, name: str) -> np.ndarray:
        try:
            j = self.feature_names.index(name)
        except ValueError:
            raise KeyError(
                f"unknown feature {name!r}; available: {', '.join(self.feature_names)}"
            ) from None
        return self.values[:, j]

    def restrict(self, names: list[str]) -> "FeatureTable":
        """Sub-table with only the given feature columns, in the given order."""
        idx = []
        for name in names:
            if name not in self.feature_names:
                raise KeyError(f"unknown feature {name!r}")
            idx.append(self.feature_names.index(name))
        return FeatureTable(
            feature_names=list(names),
            values=self.values[:, idx],
            target=self.target.copy(),
            target_name=self.target_name,
        )
