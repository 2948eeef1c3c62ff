"""Turn reflectance spectra into an index feature table."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .dataset import FeatureTable, SpectralDataset
from .registry import IndexRegistry


@dataclass
class ComputeResult:
    table: FeatureTable
    dropped_no_target: int = 0
    dropped_evaluation: int = 0
    dropped_sample_ids: list[str] = field(default_factory=list)
    messages: list[str] = field(default_factory=list)


def compute_indices(dataset: SpectralDataset, registry: IndexRegistry) -> ComputeResult:
    """Evaluate every registry formula on every sample.

    Columns follow registry order, rows follow dataset order. Samples
    without a target are dropped, as are samples where any formula divides
    by zero; both kinds are counted rather than imputed. All wavelengths
    are bound to grid bands up front, so an unresolvable wavelength fails
    before any evaluation happens.
    """
    if len(registry) == 0:
        raise ValueError("registry is empty")
    bindings = [d.bind(dataset.grid) for d in registry.definitions]

    has_target = np.array([s.target is not None for s in dataset.samples])
    n_total = len(dataset.samples)
    reflectance = dataset.reflectance_matrix()

    from . import expressions as ex

    columns = np.empty((n_total, len(registry)))
    for j, (definition, binding) in enumerate(zip(registry.definitions, bindings)):
        per_wavelength = {nm: reflectance[:, band] for nm, band in binding.items()}
        columns[:, j] = ex.evaluate_vector(definition.expression, per_wavelength, n_total)

    eval_ok = np.isfinite(columns).all(axis=1)
    keep = has_target & eval_ok

    dropped_ids = [s.sample_id for s, k in zip(dataset.samples, keep) if not k]
    kept_targets = np.array(
        [s.target for s, k in zip(dataset.samples, keep) if k], dtype=float
    )
    table = FeatureTable(
        feature_names=registry.names(),
        values=columns[keep],
        target=kept_targets,
        target_name="target",
    )
    result = ComputeResult(
        table=table,
        dropped_no_target=int((~has_target).sum()),
        dropped_evaluation=int((has_target & ~eval_ok).sum()),
        dropped_sample_ids=dropped_ids,
    )
    if result.dropped_no_target:
        result.messages.append(f"dropped {result.dropped_no_target} sample(s) without a target")
    if result.dropped_evaluation:
        result.messages.append(
            f"dropped {result.dropped_evaluation} sample(s) with division by zero"
        )
    return result
