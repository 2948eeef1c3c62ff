from .pipeline import (
    ComparisonRow,
    FeatureSet,
    auto_select,
    compare_subset_vs_full,
    evaluate_with_ranking,
    rank_with_cv,
)
from .rfe import rfe_rank
from .scoring import FeatureRanking, make_ranking, ranking_score
from .wavelengths import WavelengthHistogram, wavelength_histogram

__all__ = [
    "ComparisonRow",
    "FeatureRanking",
    "FeatureSet",
    "WavelengthHistogram",
    "auto_select",
    "compare_subset_vs_full",
    "evaluate_with_ranking",
    "make_ranking",
    "rank_with_cv",
    "ranking_score",
    "rfe_rank",
    "wavelength_histogram",
]
