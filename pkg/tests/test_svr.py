import numpy as np
import pytest

from featurelab.errors import ConvergenceWarning
from featurelab.regress import (
    SvrHyperParams,
    kkt_residuals,
    predict_svr,
    train_svr,
)

from oracles import svr_dual_qp


def test_constant_target_inside_tube():
    rng = np.random.default_rng(0)
    x = rng.uniform(0, 1, (12, 3))
    y = np.full(12, 7.0)
    model = train_svr(x, y, SvrHyperParams(c=10.0, gamma=0.5, epsilon=0.1))
    assert model.n_support == 0
    assert model.bias == pytest.approx(7.0)
    pred = predict_svr(model, x)
    assert np.all(pred >= 6.9) and np.all(pred <= 7.1)


def test_linear_1d_matches_qp_oracle():
    x = np.array([[0.0], [1.0], [2.0], [3.0]])
    y = 2.0 * x[:, 0] + 1.0
    params = SvrHyperParams(c=100.0, gamma=0.05, epsilon=0.01)
    model = train_svr(x, y, params)
    oracle_obj, _ = svr_dual_qp(x, y, params.c, params.gamma, params.epsilon)
    rel = abs(model.dual_objective - oracle_obj) / max(1.0, abs(oracle_obj))
    assert rel < 1e-4


def test_kkt_conditions_hold_after_convergence():
    rng = np.random.default_rng(1)
    for trial in range(5):
        n, d = 30, 3
        x = rng.uniform(0, 1, (n, d))
        y = np.sin(3 * x[:, 0]) + 0.3 * x[:, 1] + 0.05 * rng.normal(size=n)
        params = SvrHyperParams(c=10.0, gamma=1.0, epsilon=0.05)
        model = train_svr(x, y, params, tol=1e-3)
        assert model.converged
        assert kkt_residuals(model, x, y).max() <= 1e-3


def test_dual_feasibility_invariants():
    rng = np.random.default_rng(2)
    x = rng.uniform(0, 1, (40, 4))
    y = np.cos(2 * x[:, 0]) + x[:, 1] ** 2 + 0.1 * rng.normal(size=40)
    params = SvrHyperParams(c=5.0, gamma=0.8, epsilon=0.02)
    model = train_svr(x, y, params)
    assert np.abs(model.dual_coefficients).max() <= params.c + 1e-12
    assert abs(model.dual_coefficients.sum()) <= 1e-6 * params.c


def test_objective_monotone_across_sweeps():
    rng = np.random.default_rng(3)
    x = rng.uniform(0, 1, (50, 3))
    y = np.sin(4 * x[:, 0]) + 0.1 * rng.normal(size=50)
    model = train_svr(
        x, y, SvrHyperParams(c=20.0, gamma=1.5, epsilon=0.01), track_objective=True
    )
    trace = model.objective_trace
    assert len(trace) >= 2
    assert all(b >= a - 1e-9 * max(1, abs(a)) for a, b in zip(trace, trace[1:]))


def test_support_predictions_inside_tube():
    rng = np.random.default_rng(4)
    x = rng.uniform(0, 1, (25, 2))
    y = 2 * x[:, 0] - x[:, 1] + 0.02 * rng.normal(size=25)
    params = SvrHyperParams(c=100.0, gamma=1.0, epsilon=0.05)
    tol = 1e-3
    model = train_svr(x, y, params, tol=tol)
    pred = predict_svr(model, x)
    interior = np.abs(model.full_coefficients) < params.c - 1e-9
    inside = np.abs(pred - y) <= params.epsilon + tol
    assert np.all(inside[interior])


def test_prediction_matches_direct_kernel_sum():
    rng = np.random.default_rng(5)
    x = rng.uniform(0, 1, (30, 3))
    y = np.sin(3 * x[:, 0]) + 0.05 * rng.normal(size=30)
    params = SvrHyperParams(c=10.0, gamma=0.7, epsilon=0.05)
    model = train_svr(x, y, params)
    queries = rng.uniform(0, 1, (8, 3))
    pred = predict_svr(model, queries)
    # direct loop over support points
    qs = (queries - model.feature_mean) / model.feature_std
    for qi, q in enumerate(qs):
        total = model.bias
        for coef, s in zip(model.dual_coefficients, model.support_std):
            total += coef * np.exp(-params.gamma * ((q - s) ** 2).sum())
        assert pred[qi] == pytest.approx(total, abs=1e-12)


def test_feature_permutation_invariance():
    rng = np.random.default_rng(6)
    x = rng.uniform(0, 1, (30, 4))
    y = np.sin(3 * x[:, 0]) + x[:, 2] + 0.05 * rng.normal(size=30)
    params = SvrHyperParams(c=10.0, gamma=0.5, epsilon=0.05)
    perm = [2, 0, 3, 1]
    m1 = train_svr(x, y, params)
    m2 = train_svr(x[:, perm], y, params)
    queries = rng.uniform(0, 1, (6, 4))
    p1 = predict_svr(m1, queries)
    p2 = predict_svr(m2, queries[:, perm])
    assert np.abs(p1 - p2).max() < 1e-9


def test_convergence_warning_on_budget():
    rng = np.random.default_rng(7)
    x = rng.uniform(0, 1, (60, 2))
    y = rng.normal(size=60)
    params = SvrHyperParams(c=1000.0, gamma=50.0, epsilon=0.0)
    with pytest.warns(ConvergenceWarning):
        model = train_svr(x, y, params, max_passes=1)
    assert not model.converged


def test_input_contracts():
    params = SvrHyperParams(c=1.0, gamma=1.0, epsilon=0.1)
    with pytest.raises(ValueError):
        train_svr(np.array([[1.0]]), np.array([1.0]), params)
    with pytest.raises(ValueError):
        train_svr(np.array([[1.0], [np.nan]]), np.array([1.0, 2.0]), params)
    with pytest.raises(ValueError):
        SvrHyperParams(c=-1.0, gamma=1.0, epsilon=0.1)
    with pytest.raises(ValueError):
        SvrHyperParams(c=1.0, gamma=0.0, epsilon=0.1)
    with pytest.raises(ValueError):
        SvrHyperParams(c=1.0, gamma=1.0, epsilon=-0.1)
    model = train_svr(np.array([[0.0], [1.0], [2.0]]), np.array([0.0, 1.0, 2.0]), params)
    with pytest.raises(ValueError):
        predict_svr(model, np.zeros((2, 3)))


def test_random_small_problems_match_qp_oracle():
    rng = np.random.default_rng(8)
    for trial in range(5):
        n = int(rng.integers(8, 30))
        d = int(rng.integers(1, 4))
        x = rng.uniform(0, 1, (n, d))
        y = np.sin(3 * x[:, 0]) + 0.1 * rng.normal(size=n)
        params = SvrHyperParams(
            c=float(rng.choice([1.0, 10.0])),
            gamma=float(rng.choice([0.3, 1.0])),
            epsilon=float(rng.choice([0.01, 0.1])),
        )
        model = train_svr(x, y, params, tol=1e-4)
        oracle_obj, _ = svr_dual_qp(x, y, params.c, params.gamma, params.epsilon)
        rel = abs(model.dual_objective - oracle_obj) / max(1.0, abs(oracle_obj))
        assert rel < 1e-4, (trial, model.dual_objective, oracle_obj)
