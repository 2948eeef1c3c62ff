"""featurelab: feature-selection workbench for spectral regression.

Computes spectral-index features from band reflectance, ranks features by
recursive elimination over a support vector model, summarizes linear
structure (correlations, clustering, densities), and compares subset
against full-set performance on shared data partitions.
"""

from . import regress, select, spectra, stats
from .spectra import (
    BandGrid,
    FeatureTable,
    IndexRegistry,
    SpectralDataset,
    compute_indices,
    default_grid,
    default_registry,
    ingest_feature_csv,
    ingest_reflectance_csv,
    parse_index_expression,
)
from .stats import correlation_matrix, hcluster, histogram, kde, pearson
from .regress import ModelConfig, SvrHyperParams, kfold_cv, train_ridge, train_svr
from .select import (
    FeatureSet,
    auto_select,
    compare_subset_vs_full,
    rank_with_cv,
    ranking_score,
    rfe_rank,
    wavelength_histogram,
)

__version__ = "0.1.0"
