"""Closed-form ridge regression baseline."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .svr import standardize_columns


@dataclass
class RidgeModel:
    weights: np.ndarray  # original-scale coefficients
    intercept: float
    lam: float


def train_ridge(x: np.ndarray, y: np.ndarray, lam: float = 1.0) -> RidgeModel:
    """Least squares with an L2 penalty on standardized weights.

    The intercept is unpenalized; weights are solved on the standardized
    scale and mapped back, so ``lam -> inf`` shrinks predictions to the
    target mean.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.ndim != 2 or x.shape[0] != len(y):
        raise ValueError("x must be n x d with matching y")
    if len(y) < 2:
        raise ValueError("need at least 2 samples")
    if lam < 0:
        raise ValueError(f"lambda must be nonnegative, got {lam}")
    if not (np.isfinite(x).all() and np.isfinite(y).all()):
        raise ValueError("non-finite values in training data")

    xs, mean, std = standardize_columns(x)
    y_mean = y.mean()
    d = x.shape[1]
    # augmented least squares keeps lam = 0 well-defined on rank-deficient x
    design = np.vstack([xs, np.sqrt(lam) * np.eye(d)])
    rhs = np.concatenate([y - y_mean, np.zeros(d)])
    w_std, *_ = np.linalg.lstsq(design, rhs, rcond=None)
    weights = w_std / std
    intercept = float(y_mean - weights @ mean)
    return RidgeModel(weights=weights, intercept=intercept, lam=lam)


def predict_ridge(model: RidgeModel, x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    return x @ model.weights + model.intercept
