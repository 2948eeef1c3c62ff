"""Synthetic data generators shared by tests and the acceptance suite."""

from __future__ import annotations

import numpy as np

from featurelab.spectra import FeatureTable


def planted_table(
    n: int,
    d: int,
    seed: int,
    informative: tuple[int, ...] = (0, 1, 2),
    noise: float = 0.1,
) -> FeatureTable:
    """Uniform features where only ``informative`` columns drive the target.

    The target mixes three distinct nonlinearities of comparable magnitude
    so the model has to pick every planted column up, not just the
    strongest one.
    """
    rng = np.random.default_rng(seed)
    x = rng.uniform(0.0, 1.0, size=(n, d))
    parts = [
        np.sin(3.0 * x[:, informative[0 % len(informative)]]),
        2.0 * np.cos(2.0 * x[:, informative[1 % len(informative)]]),
        2.0 * x[:, informative[2 % len(informative)]] ** 2,
    ]
    y = sum(parts[: len(informative)]) + noise * rng.normal(size=n)
    return FeatureTable(
        feature_names=[f"f{j:02d}" for j in range(d)],
        values=x,
        target=np.asarray(y, dtype=float),
        target_name="target",
    )


def single_planted_table(n: int, d: int, seed: int, noise: float = 0.01) -> FeatureTable:
    """One informative column (column 0), the rest pure noise."""
    rng = np.random.default_rng(seed)
    x = rng.uniform(0.0, 1.0, size=(n, d))
    y = np.sin(3.0 * x[:, 0]) + noise * rng.normal(size=n)
    return FeatureTable(
        feature_names=[f"f{j:02d}" for j in range(d)],
        values=x,
        target=y,
        target_name="target",
    )


def redundant_table(n: int, seed: int, informative: int = 10, total: int = 36) -> FeatureTable:
    """``informative`` signal columns plus noisy copies and pure noise.

    Columns [0, informative) carry the signal; the next block duplicates
    them with small perturbations; the remainder is noise. Designed so a
    subset of size ``informative`` can match the full table's performance.
    """
    rng = np.random.default_rng(seed)
    base = rng.uniform(0.0, 1.0, size=(n, informative))
    redundant_count = (total - informative) // 2
    noise_count = total - informative - redundant_count
    copies = base[:, rng.integers(0, informative, redundant_count)]
    copies = copies + 0.02 * rng.normal(size=copies.shape)
    noise_cols = rng.uniform(0.0, 1.0, size=(n, noise_count))
    x = np.column_stack([base, copies, noise_cols])

    weights = 0.5 + rng.uniform(0.0, 1.0, informative)
    y = np.sin(3.0 * base[:, 0]) + (base[:, 1:] * weights[1:]).sum(axis=1)
    y = y + 0.05 * rng.normal(size=n)
    return FeatureTable(
        feature_names=[f"f{j:02d}" for j in range(total)],
        values=x,
        target=y,
        target_name="target",
    )


def nonlinear_bench_table(n: int, d: int, seed: int, noise: float = 0.1) -> FeatureTable:
    """Strongly nonlinear target where a linear model must underperform."""
    rng = np.random.default_rng(seed)
    x = rng.uniform(-1.0, 1.0, size=(n, d))
    y = np.sin(3.0 * x[:, 0]) * np.cos(2.0 * x[:, 1]) + x[:, 2] ** 2
    y = y + noise * rng.normal(size=n)
    return FeatureTable(
        feature_names=[f"f{j:02d}" for j in range(d)],
        values=x,
        target=y,
        target_name="target",
    )
