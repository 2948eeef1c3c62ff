"""Goodness-of-fit metrics."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Metrics:
    r2: float
    rmse: float


def rmse(truth: np.ndarray, pred: np.ndarray) -> float:
    truth = np.asarray(truth, dtype=float)
    pred = np.asarray(pred, dtype=float)
    if truth.shape != pred.shape:
        raise ValueError(f"length mismatch: {truth.shape} vs {pred.shape}")
    if truth.size < 1:
        raise ValueError("need at least 1 pair")
    return float(np.sqrt(np.mean((truth - pred) ** 2)))


def r2(truth: np.ndarray, pred: np.ndarray) -> float:
    """1 - SS_res / SS_tot; negative when predicting worse than the mean."""
    truth = np.asarray(truth, dtype=float)
    pred = np.asarray(pred, dtype=float)
    if truth.shape != pred.shape:
        raise ValueError(f"length mismatch: {truth.shape} vs {pred.shape}")
    if truth.size < 2:
        raise ValueError("need at least 2 pairs")
    ss_tot = float(((truth - truth.mean()) ** 2).sum())
    if ss_tot == 0.0:
        raise ValueError("target variance is zero; R^2 undefined")
    ss_res = float(((truth - pred) ** 2).sum())
    return 1.0 - ss_res / ss_tot


def metrics(truth: np.ndarray, pred: np.ndarray) -> Metrics:
    return Metrics(r2=r2(truth, pred), rmse=rmse(truth, pred))
