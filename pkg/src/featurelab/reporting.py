"""JSON-ready views of analysis results.

The CLI files and the HTTP payloads share these exact shapes, so a single
schema serves both. NaN (e.g. a fold whose held-out truth had no variance)
becomes null; all other floats pass through untouched.
"""

from __future__ import annotations

import math
from typing import Any, Optional

import numpy as np

from .regress.cv import RegressionReport
from .regress.folds import FoldPlan
from .regress.svr import SvrHyperParams
from .select.pipeline import ComparisonRow, FeatureSet
from .select.scoring import FeatureRanking
from .select.wavelengths import WavelengthHistogram
from .stats.cluster import Dendrogram
from .stats.correlation import CorrelationMatrix


def _num(value: float) -> Optional[float]:
    value = float(value)
    return None if math.isnan(value) else value


def _floats(values) -> list[Optional[float]]:
    return [_num(v) for v in np.asarray(values, dtype=float)]


def params_payload(params) -> Any:
    if isinstance(params, SvrHyperParams):
        return {"c": params.c, "gamma": params.gamma, "epsilon": params.epsilon}
    return {"lambda": float(params)}


def fold_plan_payload(plan: FoldPlan) -> dict:
    return {"k": plan.k, "seed": plan.seed, "assignments": list(plan.assignments)}


def report_payload(report: RegressionReport) -> dict:
    return {
        "model_kind": report.model_kind,
        "aggregate": {"r2": _num(report.aggregate.r2), "rmse": _num(report.aggregate.rmse)},
        "per_fold": [
            {
                "fold": f.fold,
                "r2": _num(f.metrics.r2),
                "rmse": _num(f.metrics.rmse),
                "params": params_payload(f.params),
            }
            for f in report.per_fold
        ],
        "predictions": _floats(report.predictions),
        "truth": _floats(report.truth),
        "feature_names": list(report.feature_names),
        "feature_ranking_scores": (
            None
            if report.feature_ranking_scores is None
            else _floats(report.feature_ranking_scores)
        ),
        "fold_plan": fold_plan_payload(report.fold_plan),
    }


def ranking_payload(ranking: FeatureRanking, feature_names: list[str]) -> dict:
    return {
        "feature_names": list(feature_names),
        "scores": _floats(ranking.scores),
        "per_fold_ranks": [list(r) for r in ranking.per_fold_ranks],
        "d": ranking.d,
        "k": ranking.k,
    }


def comparison_payload(row: ComparisonRow) -> dict:
    return {
        "subset": {"r2": _num(row.subset_metrics.r2), "rmse": _num(row.subset_metrics.rmse)},
        "full": {"r2": _num(row.full_metrics.r2), "rmse": _num(row.full_metrics.rmse)},
        "subset_size": row.subset_size,
        "total_size": row.total_size,
        "fold_plan": fold_plan_payload(row.fold_plan),
    }


def feature_set_payload(feature_set: FeatureSet) -> dict:
    return {
        "selected": list(feature_set.selected),
        "unselected": list(feature_set.unselected),
    }


def correlation_payload(matrix: CorrelationMatrix, dendrogram: Dendrogram) -> dict:
    return {
        "labels": list(matrix.labels),
        "values": [_floats(row) for row in matrix.values],
        "degenerate_flags": list(matrix.degenerate_flags),
        "display_order": list(matrix.display_order),
        "dendrogram": {
            "merges": [[a, b, _num(dist)] for a, b, dist in dendrogram.merges],
            "leaf_order": list(dendrogram.leaf_order),
        },
    }


def wavelength_payload(hist: WavelengthHistogram) -> dict:
    return {
        "bin_edges": _floats(hist.bin_edges),
        "counts": [int(c) for c in hist.counts],
        "overflow": hist.overflow,
        "underflow": hist.underflow,
        "absent_features": list(hist.absent_features),
    }
