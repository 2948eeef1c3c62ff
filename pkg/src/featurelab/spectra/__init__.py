from .compute import ComputeResult, compute_indices
from .dataset import FeatureTable, SpectralDataset, SpectralSample
from .expressions import evaluate, parse_expression, serialize, wavelengths_of
from .grid import BandGrid, default_grid, nearest_band
from .ingest import (
    FeatureIngestResult,
    IngestDiagnostics,
    ReflectanceIngestResult,
    ingest_feature_csv,
    ingest_reflectance_csv,
)
from .registry import (
    IndexDefinition,
    IndexRegistry,
    default_registry,
    load_registry,
    parse_index_expression,
    save_registry,
)

__all__ = [
    "BandGrid",
    "ComputeResult",
    "FeatureIngestResult",
    "FeatureTable",
    "IndexDefinition",
    "IndexRegistry",
    "IngestDiagnostics",
    "ReflectanceIngestResult",
    "SpectralDataset",
    "SpectralSample",
    "compute_indices",
    "default_grid",
    "default_registry",
    "evaluate",
    "ingest_feature_csv",
    "ingest_reflectance_csv",
    "load_registry",
    "nearest_band",
    "parse_expression",
    "parse_index_expression",
    "save_registry",
    "serialize",
    "wavelengths_of",
]
