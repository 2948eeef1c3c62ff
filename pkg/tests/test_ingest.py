import pytest

from featurelab.errors import IngestError
from featurelab.spectra import ingest_feature_csv, ingest_reflectance_csv


def test_minimal_reflectance_file():
    csv = "sample_id,b400.0,b402.2,b404.4\ns1,0.1,0.2,0.3\ns2,0.4,0.5,0.6\n"
    result = ingest_reflectance_csv(csv)
    grid = result.dataset.grid
    assert (grid.start_nm, grid.count) == (400.0, 3)
    assert grid.step_nm == pytest.approx(2.2)
    assert len(result.dataset) == 2
    assert result.dataset.samples[0].target is None


def test_reflectance_with_target_column():
    csv = "sample_id,b400.0,b402.2,target\ns1,0.1,0.2,5.5\ns2,0.4,0.5,\n"
    result = ingest_reflectance_csv(csv)
    assert result.dataset.samples[0].target == 5.5
    assert result.dataset.samples[1].target is None


def test_non_numeric_cell_skips_row_with_diagnostic():
    csv = "sample_id,b400.0,b402.2\ns1,0.1,oops\ns2,0.4,0.5\n"
    result = ingest_reflectance_csv(csv)
    assert len(result.dataset) == 1
    assert result.diagnostics.rows_dropped == 1
    assert any("row 2" in msg for msg in result.diagnostics.messages)


def test_irregular_spacing_is_hard_error():
    csv = "sample_id,b400.0,b402.2,b405.0\ns1,0.1,0.2,0.3\n"
    with pytest.raises(IngestError, match="spacing"):
        ingest_reflectance_csv(csv)


def test_duplicate_sample_id_is_hard_error():
    csv = "sample_id,b400.0,b402.2\ns1,0.1,0.2\ns1,0.3,0.4\n"
    with pytest.raises(IngestError, match="duplicate"):
        ingest_reflectance_csv(csv)


def test_out_of_range_reflectance_flagged_not_rejected():
    csv = "sample_id,b400.0,b402.2\ns1,1.4,-0.2\n"
    result = ingest_reflectance_csv(csv)
    assert len(result.dataset) == 1
    assert result.diagnostics.out_of_range_values == 2


def test_feature_csv_basic():
    csv = "a,b,yield\n1,2,10\n3,4,20\n5,6,30\n"
    result = ingest_feature_csv(csv, target_name="yield")
    assert result.table.feature_names == ["a", "b"]
    assert result.table.n == 3 and result.table.d == 2
    assert list(result.table.target) == [10.0, 20.0, 30.0]


def test_feature_csv_drops_incomplete_rows():
    csv = "a,b,yield\n1,2,10\n3,,20\n5,6,30\n"
    result = ingest_feature_csv(csv, target_name="yield")
    assert result.table.n == 2
    assert result.diagnostics.rows_dropped == 1


def test_feature_csv_missing_target_column():
    csv = "a,b,c\n1,2,3\n4,5,6\n"
    with pytest.raises(IngestError) as err:
        ingest_feature_csv(csv, target_name="yield")
    assert "a, b, c" in str(err.value)


def test_feature_csv_needs_two_complete_rows():
    csv = "a,yield\n1,10\nbad,20\n"
    with pytest.raises(IngestError, match="2 complete rows"):
        ingest_feature_csv(csv, target_name="yield")


def test_feature_csv_id_column_excluded():
    csv = "sample_id,a,yield\np1,1,10\np2,3,20\n"
    result = ingest_feature_csv(csv, target_name="yield")
    assert result.table.feature_names == ["a"]
