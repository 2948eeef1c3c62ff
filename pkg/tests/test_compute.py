import numpy as np
import pytest

from featurelab.errors import WavelengthRangeError
from featurelab.spectra import (
    BandGrid,
    IndexRegistry,
    SpectralDataset,
    SpectralSample,
    compute_indices,
    nearest_band,
    parse_index_expression,
)


def make_dataset(rows, grid=None, targets=None):
    grid = grid or BandGrid(400.0, 2.2, 272)
    samples = []
    for i, row in enumerate(rows):
        target = targets[i] if targets is not None else 1.0 + i
        samples.append(SpectralSample(f"s{i}", row, target))
    return SpectralDataset(grid=grid, samples=samples)


def registry_of(*pairs):
    return IndexRegistry([parse_index_expression(expr, name=name) for name, expr in pairs])


def test_identity_formula_reads_nearest_band():
    grid = BandGrid(400.0, 2.2, 272)
    rng = np.random.default_rng(0)
    rows = rng.uniform(0, 1, (3, 272))
    result = compute_indices(make_dataset(rows, grid), registry_of(("ident", "R550")))
    band = nearest_band(grid, 550.0)
    assert np.allclose(result.table.values[:, 0], rows[:, band])


def test_normalized_difference_value():
    grid = BandGrid(400.0, 2.2, 272)
    rows = np.full((2, 272), 0.5)
    band800 = nearest_band(grid, 800.0)
    band670 = nearest_band(grid, 670.0)
    rows[:, band800] = 0.6
    rows[:, band670] = 0.2
    result = compute_indices(
        make_dataset(rows, grid), registry_of(("nd", "(R800 - R670) / (R800 + R670)"))
    )
    assert result.table.values[0, 0] == pytest.approx((0.6 - 0.2) / (0.6 + 0.2))


def test_division_by_zero_drops_row_and_counts():
    grid = BandGrid(400.0, 2.2, 272)
    rows = np.full((3, 272), 0.5)
    band800 = nearest_band(grid, 800.0)
    band670 = nearest_band(grid, 670.0)
    rows[0, band800] = 0.0
    rows[0, band670] = 0.0
    result = compute_indices(
        make_dataset(rows, grid), registry_of(("nd", "(R800 - R670) / (R800 + R670)"))
    )
    assert result.table.n == 2
    assert result.dropped_evaluation == 1
    assert result.dropped_sample_ids == ["s0"]


def test_samples_without_target_dropped():
    grid = BandGrid(400.0, 2.2, 272)
    rows = np.full((3, 272), 0.5)
    result = compute_indices(
        make_dataset(rows, grid, targets=[1.0, None, 2.0]),
        registry_of(("ident", "R550")),
    )
    assert result.table.n == 2
    assert result.dropped_no_target == 1


def test_unbound_wavelength_fails_before_evaluation():
    grid = BandGrid(400.0, 2.2, 10)  # ends at 419.8
    rows = np.full((2, 10), 0.5)
    with pytest.raises(WavelengthRangeError, match="idx800"):
        compute_indices(make_dataset(rows, grid), registry_of(("idx800", "R800")))


def test_column_order_follows_registry_order():
    grid = BandGrid(400.0, 2.2, 272)
    rng = np.random.default_rng(1)
    rows = rng.uniform(0.1, 0.9, (4, 272))
    reg = registry_of(("one", "R500"), ("two", "R600"), ("three", "R700"))
    result = compute_indices(make_dataset(rows, grid), reg)
    assert result.table.feature_names == ["one", "two", "three"]
    for j, nm in enumerate([500.0, 600.0, 700.0]):
        assert np.allclose(result.table.values[:, j], rows[:, nearest_band(grid, nm)])
