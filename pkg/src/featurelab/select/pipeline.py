"""Ranking-aware evaluation, automatic selection, and subset comparison."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from ..regress.cv import (
    ModelConfig,
    RegressionReport,
    FoldResult,
    choose_params,
    derive_seed,
    kfold_cv,
    predict_model,
    train_model,
    _fold_metrics,
)
from ..regress.folds import FoldPlan, make_fold_plan
from ..regress.metrics import Metrics, r2, rmse
from ..spectra.dataset import FeatureTable
from .rfe import rfe_rank
from .scoring import FeatureRanking, make_ranking


@dataclass
class FeatureSet:
    """The human-facing partition of feature names into two lists."""

    selected: list[str]
    unselected: list[str] = field(default_factory=list)

    def __post_init__(self):
        overlap = set(self.selected) & set(self.unselected)
        if overlap:
            raise ValueError(f"features on both lists: {sorted(overlap)}")

    def all_names(self) -> list[str]:
        return list(self.selected) + list(self.unselected)

    def move(self, name: str, direction: str) -> None:
        """Atomically move a feature between the two lists."""
        if direction not in ("select", "unselect"):
            raise ValueError(f"direction must be select or unselect, got {direction!r}")
        src, dst = (
            (self.unselected, self.selected)
            if direction == "select"
            else (self.selected, self.unselected)
        )
        if name not in src:
            side = "unselected" if direction == "select" else "selected"
            raise ValueError(f"feature {name!r} is not on the {side} list")
        src.remove(name)
        dst.append(name)


@dataclass
class ComparisonRow:
    subset_metrics: Metrics
    full_metrics: Metrics
    fold_plan: FoldPlan
    subset_size: int
    total_size: int
    subset_report: Optional[RegressionReport] = field(default=None, repr=False)
    full_report: Optional[RegressionReport] = field(default=None, repr=False)


def evaluate_with_ranking(
    table: FeatureTable,
    k: int,
    seed: int,
    config: ModelConfig = ModelConfig(),
    retrain_each_step: bool = True,
    progress: Optional[Callable[[float], None]] = None,
) -> tuple[RegressionReport, FeatureRanking]:
    """One pass over the folds producing both the CV report and the ranking.

    Runs the identical fold plan and per-fold hyperparameter search as
    kfold_cv, then adds an elimination ranking on each training split, so
    the importance scores always describe the displayed evaluation run.
    """
    if config.kind != "svr":
        raise ValueError("feature ranking is defined for the svr model kind")
    n = table.n
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if n < 2 * k:
        raise ValueError(f"need n >= 2k samples, got n={n}, k={k}")
    plan = make_fold_plan(n, k, seed)
    x, y = table.values, table.target

    predictions = np.empty(n)
    per_fold: list[FoldResult] = []
    per_fold_ranks: list[list[int]] = []
    for fold in range(k):
        tr, te = plan.train_indices(fold), plan.test_indices(fold)
        params = choose_params(x[tr], y[tr], config, derive_seed(seed, fold))
        model = train_model(x[tr], y[tr], params, config)
        pred = predict_model(model, x[te])
        predictions[te] = pred
        per_fold.append(FoldResult(fold=fold, metrics=_fold_metrics(y[te], pred), params=params))
        ranks = rfe_rank(
            x[tr], y[tr], params,
            tol=config.tol, max_passes=config.max_passes,
            retrain_each_step=retrain_each_step,
        )
        per_fold_ranks.append([int(r) for r in ranks])
        if progress is not None:
            progress((fold + 1) / k)

    ranking = make_ranking(per_fold_ranks)
    report = RegressionReport(
        per_fold=per_fold,
        predictions=predictions,
        truth=y.copy(),
        aggregate=Metrics(r2=r2(y, predictions), rmse=rmse(y, predictions)),
        fold_plan=plan,
        model_kind=config.kind,
        feature_names=list(table.feature_names),
        feature_ranking_scores=ranking.scores,
    )
    return report, ranking


def rank_with_cv(
    table: FeatureTable,
    k: int,
    seed: int,
    config: ModelConfig = ModelConfig(),
    progress: Optional[Callable[[float], None]] = None,
) -> FeatureRanking:
    """Per-fold grid search + elimination ranking, averaged into scores."""
    _, ranking = evaluate_with_ranking(table, k, seed, config, progress=progress)
    return ranking


def auto_select(
    table: FeatureTable,
    m: int,
    k: int,
    seed: int,
    config: ModelConfig = ModelConfig(),
    ranking: Optional[FeatureRanking] = None,
    progress: Optional[Callable[[float], None]] = None,
) -> FeatureSet:
    """Keep the m features with the highest scores, ties to earlier columns.

    The selected list comes out in descending-score order; pass a
    precomputed ``ranking`` to skip the cross-validated ranking pass.
    """
    d = table.d
    if not 1 <= m <= d:
        raise ValueError(f"m must be in [1, {d}], got {m}")
    if ranking is None:
        ranking = rank_with_cv(table, k, seed, config, progress=progress)
    order = sorted(range(d), key=lambda j: (-ranking.scores[j], j))
    chosen = order[:m]
    selected = [table.feature_names[j] for j in chosen]
    unselected = [name for name in table.feature_names if name not in set(selected)]
    return FeatureSet(selected=selected, unselected=unselected)


def compare_subset_vs_full(
    table: FeatureTable,
    feature_set: FeatureSet,
    k: int,
    seed: int,
    config: ModelConfig = ModelConfig(),
    progress: Optional[Callable[[float], None]] = None,
) -> ComparisonRow:
    """Evaluate the selected subset and the full table on one shared fold plan.

    Subset columns are taken in table order, so selecting everything runs
    the exact same computation twice and the two sides agree to the bit.
    """
    if not feature_set.selected:
        raise ValueError("selected feature list is empty")
    selected_set = set(feature_set.selected)
    unknown = selected_set - set(table.feature_names)
    if unknown:
        raise KeyError(f"selected features not in table: {sorted(unknown)}")
    subset_names = [name for name in table.feature_names if name in selected_set]

    plan = make_fold_plan(table.n, k, seed)
    half: Callable[[float], None] | None = None
    if progress is not None:
        half = lambda frac: progress(frac / 2)
    subset_report = kfold_cv(table.restrict(subset_names), k, seed, config, plan=plan,
                             progress=half)
    if progress is not None:
        half = lambda frac: progress(0.5 + frac / 2)
    full_report = kfold_cv(table, k, seed, config, plan=plan, progress=half)
    return ComparisonRow(
        subset_metrics=subset_report.aggregate,
        full_metrics=full_report.aggregate,
        fold_plan=plan,
        subset_size=len(subset_names),
        total_size=table.d,
        subset_report=subset_report,
        full_report=full_report,
    )
