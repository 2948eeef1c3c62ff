"""Recursive feature elimination over the RBF support vector model.

Removal order is decided by how little a feature's disappearance disturbs
the trained model's dual objective: with coefficients held fixed, drop the
feature from the kernel distance and measure |W - W_without_feature|. The
feature with the smallest disturbance is the least load-bearing and goes
first; the survivor of the whole loop gets rank 1.
"""

from __future__ import annotations

import numpy as np

from ..errors import RfeError
from ..regress.svr import SvrHyperParams, TrainedSvr, train_svr


def _disturbances(model: TrainedSvr, column_subset: np.ndarray | None = None) -> np.ndarray:
    """|W_full - W_without_f| for every feature of the model (or subset).

    W = -(1/2) sum_ij coef_i coef_j K(x_i, x_j) over the support points.
    Removing feature f multiplies each kernel entry by exp(gamma * sq_f).
    """
    sup = model.support_std if column_subset is None else model.support_std[:, column_subset]
    coef = model.dual_coefficients
    n_features = sup.shape[1]
    if len(coef) == 0:
        return np.zeros(n_features)
    gamma = model.params.gamma
    diffs = sup[:, None, :] - sup[None, :, :]
    sq = diffs**2
    kernel = np.exp(-gamma * sq.sum(axis=2))
    weighted = np.outer(coef, coef) * kernel
    quad_full = weighted.sum()
    quad_without = np.einsum("ij,ijf->f", weighted, np.exp(gamma * sq))
    return 0.5 * np.abs(quad_without - quad_full)


def rfe_rank(
    x: np.ndarray,
    y: np.ndarray,
    params: SvrHyperParams,
    tol: float = 1e-3,
    max_passes: int = 1000,
    retrain_each_step: bool = True,
) -> np.ndarray:
    """Rank all columns: 1 = eliminated last (most important), d = first out.

    Ties in the elimination criterion break toward the lowest column
    index. With ``retrain_each_step=False`` the initial model's
    coefficients are reused and only the kernel distance shrinks as
    features leave.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    d = x.shape[1]
    if d < 1:
        raise ValueError("need at least one feature")
    if d == 1:
        return np.array([1])

    eliminated: list[int] = []
    remaining = list(range(d))

    if retrain_each_step:
        while len(remaining) > 1:
            try:
                model = train_svr(x[:, remaining], y, params, tol=tol, max_passes=max_passes)
            except Exception as err:
                raise RfeError(f"training failed with {len(remaining)} features: {err}",
                               eliminated=list(eliminated)) from err
            pick = int(np.argmin(_disturbances(model)))
            eliminated.append(remaining.pop(pick))
        eliminated.append(remaining.pop())
    else:
        try:
            model = train_svr(x, y, params, tol=tol, max_passes=max_passes)
        except Exception as err:
            raise RfeError(f"initial training failed: {err}", eliminated=[]) from err
        while len(remaining) > 1:
            cols = np.array(remaining)
            pick = int(np.argmin(_disturbances(model, column_subset=cols)))
            eliminated.append(remaining.pop(pick))
        eliminated.append(remaining.pop())

    ranks = np.empty(d, dtype=int)
    for step, feature in enumerate(eliminated):
        ranks[feature] = d - step
    return ranks
