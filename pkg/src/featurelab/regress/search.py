"""Hyperparameter selection by inner cross-validation."""

from __future__ import annotations

import numpy as np

from .folds import make_fold_plan
from .metrics import r2
from .svr import SvrHyperParams, train_svr, predict_svr

DEFAULT_C_VALUES = (0.1, 1.0, 10.0, 100.0)
DEFAULT_EPSILON_VALUES = (0.01, 0.1, 0.5)
DEFAULT_GAMMA_FACTORS = (0.25, 1.0, 4.0)


def default_grid(d: int) -> list[SvrHyperParams]:
    """C x epsilon x gamma cross product spanning under- to over-fitting.

    The gamma anchor is 1/d: after standardization each feature has unit
    variance, so squared distances grow like d and 1/d keeps the kernel
    scale-free in the feature count.
    """
    g0 = 1.0 / max(d, 1)
    return [
        SvrHyperParams(c=c, gamma=g0 * f, epsilon=e)
        for c in DEFAULT_C_VALUES
        for e in DEFAULT_EPSILON_VALUES
        for f in DEFAULT_GAMMA_FACTORS
    ]


def _tie_key(p: SvrHyperParams) -> tuple[float, float, float]:
    return (p.c, p.gamma, p.epsilon)


def grid_search(
    x: np.ndarray,
    y: np.ndarray,
    grid: list[SvrHyperParams],
    inner_k: int = 3,
    seed: int = 0,
    tol: float = 1e-3,
    max_passes: int = 1000,
) -> tuple[SvrHyperParams, dict[SvrHyperParams, float]]:
    """Pick the combo with the best mean held-out R^2 over an inner CV.

    All combos share one fold plan so the comparison is paired. Exact score
    ties break toward the smaller (c, gamma, epsilon). Returns the winner
    and the per-combo mean scores.
    """
    if not grid:
        raise ValueError("hyperparameter grid is empty")
    if len(grid) == 1:
        return grid[0], {grid[0]: float("nan")}
    n = len(y)
    if n < inner_k:
        raise ValueError(f"cannot run {inner_k}-fold search on {n} samples")
    plan = make_fold_plan(n, inner_k, seed)

    scores: dict[SvrHyperParams, float] = {}
    for params in grid:
        fold_scores = []
        for fold in range(inner_k):
            tr = plan.train_indices(fold)
            te = plan.test_indices(fold)
            model = train_svr(x[tr], y[tr], params, tol=tol, max_passes=max_passes)
            pred = predict_svr(model, x[te])
            if len(te) >= 2 and np.ptp(y[te]) > 0:
                fold_scores.append(r2(y[te], pred))
        scores[params] = float(np.mean(fold_scores)) if fold_scores else -np.inf

    best = max(
        scores,
        key=lambda p: (scores[p], tuple(-v for v in _tie_key(p))),
    )
    return best, scores
