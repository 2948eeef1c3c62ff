"""Pearson correlation over feature tables, target included."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..spectra.dataset import FeatureTable


@dataclass
class CorrelationMatrix:
    """Symmetric Pearson matrix over all features plus the target (last label).

    Zero-variance labels are degenerate: their whole row and column is 0
    and their flag is set; the human decides what to do with them.
    ``display_order`` is the clustering permutation used for rendering.
    """

    labels: list[str]
    values: np.ndarray
    degenerate_flags: list[bool]
    display_order: list[int] = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.labels)


def pearson(x: np.ndarray, y: np.ndarray) -> tuple[float, bool]:
    """Sample Pearson r and a degeneracy flag.

    Zero variance on either side yields (0.0, True) instead of an error:
    downstream views keep the label and flag it rather than aborting.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape:
        raise ValueError(f"length mismatch: {x.shape} vs {y.shape}")
    if x.ndim != 1 or len(x) < 2:
        raise ValueError("need 1-D vectors of length >= 2")
    dx = x - x.mean()
    dy = y - y.mean()
    sxx = float(dx @ dx)
    syy = float(dy @ dy)
    if sxx == 0.0 or syy == 0.0:
        return 0.0, True
    r = float(dx @ dy) / np.sqrt(sxx * syy)
    return float(np.clip(r, -1.0, 1.0)), False


def correlation_matrix(table: FeatureTable) -> CorrelationMatrix:
    """Pairwise Pearson over features and target; display order from clustering."""
    labels = list(table.feature_names) + [table.target_name]
    data = np.column_stack([table.values, table.target])
    n, m = data.shape

    centered = data - data.mean(axis=0)
    norms = np.sqrt((centered**2).sum(axis=0))
    degenerate = norms == 0.0
    safe_norms = np.where(degenerate, 1.0, norms)
    z = centered / safe_norms
    values = z.T @ z
    values = (values + values.T) / 2.0
    np.clip(values, -1.0, 1.0, out=values)
    values[degenerate, :] = 0.0
    values[:, degenerate] = 0.0
    diag = np.where(degenerate, 0.0, 1.0)
    np.fill_diagonal(values, diag)

    matrix = CorrelationMatrix(
        labels=labels,
        values=values,
        degenerate_flags=[bool(f) for f in degenerate],
    )
    from .cluster import hcluster

    matrix.display_order = list(hcluster(matrix).leaf_order)
    return matrix
