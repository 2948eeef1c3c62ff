import numpy as np
import pytest

from featurelab.regress import make_fold_plan, r2, rmse


def test_r2_perfect():
    t = np.array([1.0, 2.0, 3.0])
    assert r2(t, t) == 1.0


def test_r2_mean_predictor_is_zero():
    t = np.array([1.0, 2.0, 3.0])
    assert r2(t, np.full(3, t.mean())) == pytest.approx(0.0)


def test_r2_known_value():
    assert r2(np.array([1, 2, 3]), np.array([1, 2, 4])) == pytest.approx(1 - 1 / 2)


def test_r2_zero_variance_rejected():
    with pytest.raises(ValueError):
        r2(np.array([5.0, 5.0]), np.array([1.0, 2.0]))


def test_r2_affine_invariance():
    rng = np.random.default_rng(0)
    t = rng.normal(size=30)
    p = t + rng.normal(scale=0.3, size=30)
    assert r2(3 * t + 5, 3 * p + 5) == pytest.approx(r2(t, p))


def test_rmse_perfect_and_known():
    t = np.array([1.0, 2.0, 3.0])
    assert rmse(t, t) == 0.0
    assert rmse(t, np.array([1, 2, 4])) == pytest.approx(np.sqrt(1 / 3))


def test_rmse_scales_linearly():
    t = np.array([1.0, 2.0, 3.0])
    p = np.array([1.5, 2.5, 2.0])
    assert rmse(t, t + 2 * (p - t)) == pytest.approx(2 * rmse(t, p))


def test_rmse_length_mismatch():
    with pytest.raises(ValueError):
        rmse(np.array([1.0]), np.array([1.0, 2.0]))


def test_fold_sizes_differ_by_at_most_one():
    plan = make_fold_plan(10, 3, 0)
    sizes = sorted(len(plan.test_indices(f)) for f in range(3))
    assert sizes == [3, 3, 4]


def test_fold_plan_deterministic():
    p1 = make_fold_plan(50, 5, 123)
    p2 = make_fold_plan(50, 5, 123)
    assert p1.assignments == p2.assignments
    p3 = make_fold_plan(50, 5, 124)
    assert p1.assignments != p3.assignments


def test_fold_plan_partitions_everything():
    plan = make_fold_plan(23, 4, 9)
    seen = np.concatenate([plan.test_indices(f) for f in range(4)])
    assert sorted(seen) == list(range(23))
    for f in range(4):
        train = set(plan.train_indices(f))
        test = set(plan.test_indices(f))
        assert not train & test
        assert train | test == set(range(23))


def test_fold_plan_contracts():
    with pytest.raises(ValueError):
        make_fold_plan(10, 1, 0)
    with pytest.raises(ValueError):
        make_fold_plan(3, 4, 0)
