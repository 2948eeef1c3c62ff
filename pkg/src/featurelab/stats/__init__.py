from .cluster import Dendrogram, hcluster
from .correlation import CorrelationMatrix, correlation_matrix, pearson
from .density import (
    DensityEstimate,
    Histogram,
    histogram,
    kde,
    padded_grid,
    silverman_bandwidth,
)

__all__ = [
    "CorrelationMatrix",
    "Dendrogram",
    "DensityEstimate",
    "Histogram",
    "correlation_matrix",
    "hcluster",
    "histogram",
    "kde",
    "padded_grid",
    "pearson",
    "silverman_bandwidth",
]
