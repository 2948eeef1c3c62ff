import numpy as np
import pytest

from featurelab.regress import SvrHyperParams, train_ridge
from featurelab.select import rfe_rank

from synth import single_planted_table

# small-gamma regime: the kernel disturbance criterion separates signal
# from noise most reliably when the kernel is near-linear
PLANTED_PARAMS = SvrHyperParams(c=10.0, gamma=0.05, epsilon=0.05)


def test_single_feature_rank():
    assert list(rfe_rank(np.zeros((5, 1)), np.zeros(5), PLANTED_PARAMS)) == [1]


def test_output_is_permutation():
    rng = np.random.default_rng(0)
    for trial in range(5):
        d = int(rng.integers(2, 8))
        x = rng.uniform(0, 1, (40, d))
        y = rng.normal(size=40)
        ranks = rfe_rank(x, y, PLANTED_PARAMS, max_passes=50)
        assert sorted(ranks) == list(range(1, d + 1))


def test_planted_feature_gets_rank_one():
    hits = 0
    for seed in range(20):
        table = single_planted_table(200, 5, seed, noise=0.01)
        ranks = rfe_rank(table.values, table.target, PLANTED_PARAMS, max_passes=200)
        hits += ranks[0] == 1
    assert hits >= 18


def test_duplicated_informative_columns_are_interchangeable():
    """Identical copies score identically, so the tie-break eliminates
    exactly one of the pair before its twin and the survivor stays on top."""
    survivor_top = 0
    for seed in range(10):
        rng = np.random.default_rng(seed)
        u = rng.uniform(0, 1, 150)
        x = np.column_stack([u, u, rng.uniform(0, 1, (150, 4))])
        y = np.sin(3 * u) + 0.05 * rng.normal(size=150)
        ranks = rfe_rank(x, y, SvrHyperParams(c=10.0, gamma=1 / 24, epsilon=0.05),
                         max_passes=200)
        assert ranks[0] != ranks[1]
        survivor_top += min(ranks[0], ranks[1]) <= 3
    assert survivor_top >= 9


def test_linear_config_agrees_with_ridge_magnitudes():
    """Near-linear kernel: elimination order should track the ordering of
    standardized linear coefficient magnitudes."""
    params = SvrHyperParams(c=100.0, gamma=1e-3, epsilon=0.01)
    agree = 0
    for seed in range(20):
        rng = np.random.default_rng(seed)
        x = rng.uniform(0, 1, (150, 8))
        w = np.array([5.0, 4.0, 3.0, 2.0, 1.0, 0.5, 0.25, 0.1])
        y = x @ w + 0.05 * rng.normal(size=150)
        ranks = rfe_rank(x, y, params, max_passes=200)
        ridge = train_ridge(x, y, 0.1)
        magnitudes = np.abs(ridge.weights * x.std(axis=0))
        ridge_top5 = set(np.argsort(-magnitudes)[:5])
        rfe_top5 = set(np.argsort(ranks)[:5])
        agree += len(ridge_top5 & rfe_top5) >= 4
    assert agree >= 18


def test_no_retrain_mode_is_deterministic_and_valid():
    rng = np.random.default_rng(1)
    x = rng.uniform(0, 1, (60, 5))
    y = np.sin(3 * x[:, 0]) + 0.05 * rng.normal(size=60)
    r1 = rfe_rank(x, y, PLANTED_PARAMS, retrain_each_step=False)
    r2 = rfe_rank(x, y, PLANTED_PARAMS, retrain_each_step=False)
    assert np.array_equal(r1, r2)
    assert sorted(r1) == list(range(1, 6))


def test_training_failure_carries_partial_trace():
    from featurelab.errors import RfeError

    x = np.array([[1.0, 2.0], [3.0, 4.0]])
    y = np.array([1.0, np.nan])
    with pytest.raises(RfeError) as err:
        rfe_rank(x, y, PLANTED_PARAMS)
    assert err.value.eliminated == []
