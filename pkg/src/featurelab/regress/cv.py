"""k-fold evaluation loop and its report."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, Union

import numpy as np

from ..spectra.dataset import FeatureTable
from .folds import FoldPlan, make_fold_plan
from .metrics import Metrics, r2, rmse
from .ridge import RidgeModel, predict_ridge, train_ridge
from .search import default_grid, grid_search
from .svr import SvrHyperParams, TrainedSvr, predict_svr, train_svr

DEFAULT_RIDGE_LAMBDAS = (0.01, 0.1, 1.0, 10.0, 100.0)

ChosenParams = Union[SvrHyperParams, float]
AnyModel = Union[TrainedSvr, RidgeModel]


@dataclass(frozen=True)
class ModelConfig:
    """What to train inside each fold and how to pick its hyperparameters."""

    kind: str = "svr"  # "svr" or "ridge"
    svr_grid: Optional[tuple[SvrHyperParams, ...]] = None  # None -> default_grid(d)
    ridge_lambdas: tuple[float, ...] = DEFAULT_RIDGE_LAMBDAS
    inner_k: int = 3
    tol: float = 1e-3
    max_passes: int = 1000

    def __post_init__(self):
        if self.kind not in ("svr", "ridge"):
            raise ValueError(f"unknown model kind {self.kind!r}")
        if self.inner_k < 2:
            raise ValueError("inner_k must be >= 2")


@dataclass
class FoldResult:
    fold: int
    metrics: Metrics
    params: ChosenParams


@dataclass
class RegressionReport:
    per_fold: list[FoldResult]
    predictions: np.ndarray  # pooled held-out prediction per sample
    truth: np.ndarray
    aggregate: Metrics  # recomputed on the pooled pairs, not fold-averaged
    fold_plan: FoldPlan
    model_kind: str
    feature_names: list[str]
    feature_ranking_scores: Optional[np.ndarray] = field(default=None)


def derive_seed(seed: int, fold: int) -> int:
    """Stable per-fold seed for inner searches."""
    return seed * 100003 + fold + 1


def choose_params(
    x: np.ndarray, y: np.ndarray, config: ModelConfig, seed: int
) -> ChosenParams:
    """Inner-CV hyperparameter selection for the configured model kind."""
    if config.kind == "svr":
        grid = list(config.svr_grid) if config.svr_grid else default_grid(x.shape[1])
        best, _ = grid_search(
            x, y, grid, inner_k=config.inner_k, seed=seed,
            tol=config.tol, max_passes=config.max_passes,
        )
        return best
    lambdas = config.ridge_lambdas
    if len(lambdas) == 1:
        return float(lambdas[0])
    plan = make_fold_plan(len(y), config.inner_k, seed)
    best_lam, best_score = None, -np.inf
    for lam in sorted(lambdas):
        fold_scores = []
        for fold in range(config.inner_k):
            tr, te = plan.train_indices(fold), plan.test_indices(fold)
            model = train_ridge(x[tr], y[tr], lam)
            if len(te) >= 2 and np.ptp(y[te]) > 0:
                fold_scores.append(r2(y[te], predict_ridge(model, x[te])))
        score = float(np.mean(fold_scores)) if fold_scores else -np.inf
        if score > best_score:
            best_lam, best_score = lam, score
    return float(best_lam)


def train_model(x: np.ndarray, y: np.ndarray, params: ChosenParams, config: ModelConfig) -> AnyModel:
    if config.kind == "svr":
        return train_svr(x, y, params, tol=config.tol, max_passes=config.max_passes)
    return train_ridge(x, y, params)


def predict_model(model: AnyModel, x: np.ndarray) -> np.ndarray:
    if isinstance(model, TrainedSvr):
        return predict_svr(model, x)
    return predict_ridge(model, x)


def _fold_metrics(truth: np.ndarray, pred: np.ndarray) -> Metrics:
    if len(truth) >= 2 and np.ptp(truth) > 0:
        return Metrics(r2=r2(truth, pred), rmse=rmse(truth, pred))
    return Metrics(r2=float("nan"), rmse=rmse(truth, pred))


def kfold_cv(
    table: FeatureTable,
    k: int,
    seed: int,
    config: ModelConfig = ModelConfig(),
    plan: Optional[FoldPlan] = None,
    progress: Optional[Callable[[float], None]] = None,
) -> RegressionReport:
    """Per fold: pick hyperparameters on the training split, train, predict
    the held-out fold; aggregate metrics come from the pooled pairs.

    An externally built ``plan`` lets two runs share the exact same data
    partition (the subset-versus-full comparison depends on that).
    """
    n = table.n
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if n < 2 * k:
        raise ValueError(f"need n >= 2k samples, got n={n}, k={k}")
    if plan is None:
        plan = make_fold_plan(n, k, seed)
    elif plan.n != n or plan.k != k:
        raise ValueError("fold plan does not match the table/k")

    x, y = table.values, table.target
    predictions = np.empty(n)
    per_fold: list[FoldResult] = []
    for fold in range(k):
        tr, te = plan.train_indices(fold), plan.test_indices(fold)
        params = choose_params(x[tr], y[tr], config, derive_seed(seed, fold))
        model = train_model(x[tr], y[tr], params, config)
        pred = predict_model(model, x[te])
        predictions[te] = pred
        per_fold.append(FoldResult(fold=fold, metrics=_fold_metrics(y[te], pred), params=params))
        if progress is not None:
            progress((fold + 1) / k)

    aggregate = Metrics(r2=r2(y, predictions), rmse=rmse(y, predictions))
    return RegressionReport(
        per_fold=per_fold,
        predictions=predictions,
        truth=y.copy(),
        aggregate=aggregate,
        fold_plan=plan,
        model_kind=config.kind,
        feature_names=list(table.feature_names),
    )
