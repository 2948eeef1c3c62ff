"""CSV ingestion for reflectance spectra and precomputed feature tables."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import IO

import numpy as np

from ..errors import IngestError
from .dataset import FeatureTable, SpectralDataset, SpectralSample
from .grid import BandGrid

SPACING_TOL_NM = 1e-6


@dataclass
class IngestDiagnostics:
    rows_read: int = 0
    rows_kept: int = 0
    rows_dropped: int = 0
    out_of_range_values: int = 0
    messages: list[str] = field(default_factory=list)


@dataclass
class ReflectanceIngestResult:
    dataset: SpectralDataset
    diagnostics: IngestDiagnostics


@dataclass
class FeatureIngestResult:
    table: FeatureTable
    diagnostics: IngestDiagnostics


def _as_stream(source: str | IO[str]) -> IO[str]:
    if isinstance(source, str):
        return io.StringIO(source)
    return source


def _infer_grid(wavelengths: list[float]) -> BandGrid:
    count = len(wavelengths)
    if count == 1:
        # spacing is undeterminable from one band; the value only matters
        # for the half-step binding window
        return BandGrid(wavelengths[0], 2.2, 1)
    start = wavelengths[0]
    step = (wavelengths[-1] - start) / (count - 1)
    if step <= 0:
        raise IngestError("band wavelengths must be strictly increasing")
    for i, nm in enumerate(wavelengths):
        expected = start + i * step
        if abs(nm - expected) > SPACING_TOL_NM:
            raise IngestError(
                f"irregular wavelength spacing: column b{nm} deviates from the "
                f"arithmetic progression (expected {expected:.6f} nm)"
            )
    return BandGrid(start, step, count)


def ingest_reflectance_csv(source: str | IO[str], name: str = "dataset") -> ReflectanceIngestResult:
    """Parse ``sample_id, b<nm>..., target?`` rows into a SpectralDataset.

    The band grid is inferred from the header; irregular spacing and
    duplicate sample ids are hard errors, while rows with unparseable
    cells are skipped and reported. Reflectance outside [0, 1] is flagged
    in the diagnostics but kept.
    """
    reader = csv.reader(_as_stream(source))
    try:
        header = next(reader)
    except StopIteration:
        raise IngestError("empty input: header row required") from None
    header = [h.strip() for h in header]
    if not header or header[0] != "sample_id":
        raise IngestError("first header column must be 'sample_id'")

    has_target = bool(header) and header[-1] == "target"
    band_columns = header[1:-1] if has_target else header[1:]
    if not band_columns:
        raise IngestError("no band columns found (expected b<wavelength> headers)")
    wavelengths = []
    for col in band_columns:
        if not col.startswith("b"):
            raise IngestError(f"band column {col!r} must be named b<wavelength>")
        try:
            wavelengths.append(float(col[1:]))
        except ValueError:
            raise IngestError(f"band column {col!r} has a non-numeric wavelength") from None
    grid = _infer_grid(wavelengths)

    diag = IngestDiagnostics()
    samples: list[SpectralSample] = []
    seen_ids: set[str] = set()
    for rownum, row in enumerate(reader, start=2):
        if not row or all(not c.strip() for c in row):
            continue
        diag.rows_read += 1
        if len(row) != len(header):
            diag.rows_dropped += 1
            diag.messages.append(f"row {rownum}: expected {len(header)} cells, got {len(row)}")
            continue
        sample_id = row[0].strip()
        if sample_id in seen_ids:
            raise IngestError(f"row {rownum}: duplicate sample_id {sample_id!r}")
        band_cells = row[1 : 1 + len(band_columns)]
        try:
            values = np.array([float(c) for c in band_cells])
        except ValueError:
            diag.rows_dropped += 1
            diag.messages.append(f"row {rownum}: non-numeric reflectance cell, row skipped")
            continue
        target = None
        if has_target:
            cell = row[-1].strip()
            if cell:
                try:
                    target = float(cell)
                except ValueError:
                    diag.rows_dropped += 1
                    diag.messages.append(f"row {rownum}: non-numeric target cell, row skipped")
                    continue
        outside = int(((values < 0.0) | (values > 1.0)).sum())
        if outside:
            diag.out_of_range_values += outside
            diag.messages.append(f"row {rownum}: {outside} reflectance value(s) outside [0, 1]")
        seen_ids.add(sample_id)
        samples.append(SpectralSample(sample_id, values, target))
        diag.rows_kept += 1

    dataset = SpectralDataset(grid=grid, samples=samples, name=name)
    return ReflectanceIngestResult(dataset, diag)


def ingest_feature_csv(
    source: str | IO[str],
    target_name: str,
    id_column: str = "sample_id",
) -> FeatureIngestResult:
    """Parse a plain feature CSV; every non-target numeric column is a feature.

    Rows with any missing or unparseable cell are dropped and counted. A
    column named ``id_column``, when present, is treated as a row label
    and excluded from the features.
    """
    reader = csv.reader(_as_stream(source))
    try:
        header = [h.strip() for h in next(reader)]
    except StopIteration:
        raise IngestError("empty input: header row required") from None
    if target_name not in header:
        raise IngestError(
            f"target column {target_name!r} not in header; available: {', '.join(header)}"
        )
    target_idx = header.index(target_name)
    skip = {target_idx}
    if id_column in header:
        skip.add(header.index(id_column))
    feature_idx = [i for i in range(len(header)) if i not in skip]
    feature_names = [header[i] for i in feature_idx]
    if not feature_names:
        raise IngestError("no feature columns found")

    diag = IngestDiagnostics()
    rows: list[list[float]] = []
    targets: list[float] = []
    for rownum, row in enumerate(reader, start=2):
        if not row or all(not c.strip() for c in row):
            continue
        diag.rows_read += 1
        if len(row) != len(header):
            diag.rows_dropped += 1
            diag.messages.append(f"row {rownum}: expected {len(header)} cells, got {len(row)}")
            continue
        try:
            features = [float(row[i]) for i in feature_idx]
            target = float(row[target_idx])
        except ValueError:
            diag.rows_dropped += 1
            diag.messages.append(f"row {rownum}: missing or non-numeric cell, row dropped")
            continue
        if not all(np.isfinite(features)) or not np.isfinite(target):
            diag.rows_dropped += 1
            diag.messages.append(f"row {rownum}: non-finite cell, row dropped")
            continue
        rows.append(features)
        targets.append(target)
        diag.rows_kept += 1

    if len(rows) < 2:
        raise IngestError(f"need at least 2 complete rows, got {len(rows)}")
    table = FeatureTable(
        feature_names=feature_names,
        values=np.array(rows),
        target=np.array(targets),
        target_name=target_name,
    )
    return FeatureIngestResult(table, diag)
