from .cv import (
    FoldResult,
    ModelConfig,
    RegressionReport,
    choose_params,
    derive_seed,
    kfold_cv,
    predict_model,
    train_model,
)
from .folds import FoldPlan, make_fold_plan
from .metrics import Metrics, metrics, r2, rmse
from .ridge import RidgeModel, predict_ridge, train_ridge
from .search import default_grid, grid_search
from .svr import (
    SvrHyperParams,
    TrainedSvr,
    kkt_residuals,
    predict_svr,
    rbf_kernel,
    standardize_columns,
    train_svr,
)

__all__ = [
    "FoldPlan",
    "FoldResult",
    "Metrics",
    "ModelConfig",
    "RegressionReport",
    "RidgeModel",
    "SvrHyperParams",
    "TrainedSvr",
    "choose_params",
    "default_grid",
    "derive_seed",
    "grid_search",
    "kfold_cv",
    "kkt_residuals",
    "make_fold_plan",
    "metrics",
    "predict_model",
    "predict_ridge",
    "predict_svr",
    "r2",
    "rbf_kernel",
    "rmse",
    "standardize_columns",
    "train_model",
    "train_ridge",
    "train_svr",
]
