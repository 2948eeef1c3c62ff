"""Epsilon-insensitive support vector regression with an RBF kernel.

The dual quadratic program

    maximize  y'b - eps * sum(a + a*) - (1/2) b' K b,   b = a - a*
    subject   sum(b) = 0,  0 <= a, a* <= C

is solved by sequential minimal optimization: repeatedly pick the pair of
dual variables that most violates the KKT conditions and optimize it
analytically, holding everything else fixed. The violation measure is the
gap between the largest lower bound and the smallest upper bound that the
KKT conditions place on the bias, so the stopping rule *is* the maximum
KKT violation.

Features are standardized internally (zero mean, unit variance; constant
columns pass through) because RBF distances are scale-sensitive. Targets
stay in their original units, so epsilon is expressed in target units.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..errors import ConvergenceWarning


@dataclass(frozen=True)
class SvrHyperParams:
    c: float
    gamma: float
    epsilon: float

    def __post_init__(self):
        if self.c <= 0:
            raise ValueError(f"c must be positive, got {self.c}")
        if self.gamma <= 0:
            raise ValueError(f"gamma must be positive, got {self.gamma}")
        if self.epsilon < 0:
            raise ValueError(f"epsilon must be nonnegative, got {self.epsilon}")


@dataclass
class TrainedSvr:
    params: SvrHyperParams
    feature_mean: np.ndarray
    feature_std: np.ndarray
    support_std: np.ndarray  # standardized coordinates, one row per support point
    dual_coefficients: np.ndarray  # alpha - alpha* per support point
    bias: float
    converged: bool
    sweeps: int
    kkt_violation: float
    dual_objective: float
    objective_trace: Optional[list[float]] = field(default=None, repr=False)
    # coefficient per training row (zeros included), kept for verification
    full_coefficients: Optional[np.ndarray] = field(default=None, repr=False)

    @property
    def support_points(self) -> np.ndarray:
        """Support rows on the original feature scale."""
        return self.support_std * self.feature_std + self.feature_mean

    @property
    def n_support(self) -> int:
        return len(self.dual_coefficients)


def standardize_columns(x: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Per-column (mean, std) scaling; exactly constant columns keep scale 1."""
    mean = x.mean(axis=0)
    std = x.std(axis=0)
    std = np.where(std == 0.0, 1.0, std)
    return (x - mean) / std, mean, std


def rbf_kernel(a: np.ndarray, b: np.ndarray, gamma: float) -> np.ndarray:
    """exp(-gamma * squared euclidean distance), rows of a vs rows of b."""
    sq = (
        (a**2).sum(axis=1)[:, None]
        + (b**2).sum(axis=1)[None, :]
        - 2.0 * (a @ b.T)
    )
    np.maximum(sq, 0.0, out=sq)
    return np.exp(-gamma * sq)


def train_svr(
    x: np.ndarray,
    y: np.ndarray,
    params: SvrHyperParams,
    tol: float = 1e-3,
    max_passes: int = 1000,
    track_objective: bool = False,
) -> TrainedSvr:
    """Fit by SMO; one pass is n pair updates.

    Stops when the maximum KKT violation drops to ``tol``; if ``max_passes``
    passes elapse first the model is returned as-is with a
    ConvergenceWarning and ``converged=False``.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.ndim != 2:
        raise ValueError("x must be an n x d matrix")
    n = x.shape[0]
    if n < 2:
        raise ValueError(f"need at least 2 samples, got {n}")
    if y.shape != (n,):
        raise ValueError(f"y must have length {n}")
    if not (np.isfinite(x).all() and np.isfinite(y).all()):
        raise ValueError("non-finite values in training data")

    xs, mean, std = standardize_columns(x)
    kernel = rbf_kernel(xs, xs, params.gamma)

    c, eps = params.c, params.epsilon
    theta = np.zeros(2 * n)  # alpha in [:n], alpha* in [n:]
    beta = np.zeros(n)
    f_resid = y.copy()  # F_i = y_i - (K beta)_i
    trace: Optional[list[float]] = [] if track_objective else None

    kernel_diag2 = np.tile(np.diag(kernel), 2)
    max_iter = max_passes * n
    neg_inf = -np.inf
    pos_inf = np.inf
    violation = pos_inf
    iterations = 0

    while iterations < max_iter:
        alpha = theta[:n]
        alpha_star = theta[n:]
        up_vals = np.concatenate(
            [
                np.where(alpha < c, f_resid - eps, neg_inf),
                np.where(alpha_star > 0.0, f_resid + eps, neg_inf),
            ]
        )
        low_vals = np.concatenate(
            [
                np.where(alpha > 0.0, f_resid - eps, pos_inf),
                np.where(alpha_star < c, f_resid + eps, pos_inf),
            ]
        )
        i = int(np.argmax(up_vals))
        m_val = up_vals[i]
        violation = m_val - low_vals.min()
        if violation <= tol:
            break

        a_idx, z_i = (i, 1.0) if i < n else (i - n, -1.0)

        # second-order choice of the partner: among violating candidates,
        # take the one whose analytic pair update decreases the objective most
        gaps = m_val - low_vals
        eta_all = kernel[a_idx, a_idx] + kernel_diag2 - 2.0 * np.tile(kernel[a_idx], 2)
        np.maximum(eta_all, 1e-12, out=eta_all)
        decrease = np.where(gaps > 0.0, gaps * gaps / eta_all, neg_inf)
        j = int(np.argmax(decrease))

        b_idx, z_j = (j, 1.0) if j < n else (j - n, -1.0)

        headroom_i = c - theta[i] if z_i > 0 else theta[i]
        headroom_j = theta[j] if z_j > 0 else c - theta[j]
        s_max = min(headroom_i, headroom_j)

        eta = kernel[a_idx, a_idx] + kernel[b_idx, b_idx] - 2.0 * kernel[a_idx, b_idx]
        pair_gap = m_val - low_vals[j]
        if eta > 0.0:
            step = min(pair_gap / eta, s_max)
        else:
            step = s_max

        old_i, old_j = theta[i], theta[j]
        if step == headroom_i:
            theta[i] = c if z_i > 0 else 0.0
        else:
            theta[i] = old_i + z_i * step
        if step == headroom_j:
            theta[j] = 0.0 if z_j > 0 else c
        else:
            theta[j] = old_j - z_j * step

        d_beta_a = z_i * (theta[i] - old_i)
        d_beta_b = z_j * (theta[j] - old_j)
        beta[a_idx] += d_beta_a
        beta[b_idx] += d_beta_b
        f_resid -= kernel[:, a_idx] * d_beta_a + kernel[:, b_idx] * d_beta_b

        iterations += 1
        if trace is not None and iterations % n == 0:
            trace.append(_dual_objective(y, beta, theta, eps, kernel))

    converged = violation <= tol
    if not converged:
        warnings.warn(
            f"SMO hit the pass budget ({max_passes}) with KKT violation "
            f"{violation:.3g} > tol {tol:.3g}",
            ConvergenceWarning,
        )

    # bias sits midway between the tightest KKT bounds
    alpha = theta[:n]
    alpha_star = theta[n:]
    b_lower = np.concatenate(
        [
            np.where(alpha < c, f_resid - eps, neg_inf),
            np.where(alpha_star > 0.0, f_resid + eps, neg_inf),
        ]
    ).max()
    b_upper = np.concatenate(
        [
            np.where(alpha > 0.0, f_resid - eps, pos_inf),
            np.where(alpha_star < c, f_resid + eps, pos_inf),
        ]
    ).min()
    bias = float((b_lower + b_upper) / 2.0)

    objective = _dual_objective(y, beta, theta, eps, kernel)
    if trace is not None:
        trace.append(objective)

    support = beta != 0.0
    return TrainedSvr(
        params=params,
        feature_mean=mean,
        feature_std=std,
        support_std=xs[support],
        dual_coefficients=beta[support],
        bias=bias,
        converged=converged,
        sweeps=-(-iterations // n) if n else 0,
        kkt_violation=float(b_lower - b_upper),
        dual_objective=objective,
        objective_trace=trace,
        full_coefficients=beta,
    )


def _dual_objective(
    y: np.ndarray, beta: np.ndarray, theta: np.ndarray, eps: float, kernel: np.ndarray
) -> float:
    return float(y @ beta - eps * theta.sum() - 0.5 * beta @ kernel @ beta)


def predict_svr(model: TrainedSvr, x: np.ndarray) -> np.ndarray:
    """Kernel expansion over the support points, on the original scale."""
    x = np.asarray(x, dtype=float)
    single = x.ndim == 1
    if single:
        x = x[None, :]
    d = len(model.feature_mean)
    if x.shape[1] != d:
        raise ValueError(f"expected {d} features, got {x.shape[1]}")
    xs = (x - model.feature_mean) / model.feature_std
    if model.n_support == 0:
        out = np.full(len(xs), model.bias)
    else:
        k = rbf_kernel(xs, model.support_std, model.params.gamma)
        out = k @ model.dual_coefficients + model.bias
    return out[0] if single else out


def kkt_residuals(model: TrainedSvr, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Per-training-point violation of the epsilon-SVR optimality conditions.

    Every residual of a model trained to tolerance ``tol`` is <= ``tol``.
    Useful for verification; recomputes predictions so it stays independent
    of the solver's internal bookkeeping.
    """
    pred = predict_svr(model, x)
    err = pred - y
    c, eps = model.params.c, model.params.epsilon
    if model.full_coefficients is None:
        raise ValueError("model lacks per-row coefficients; train with train_svr")
    coef = model.full_coefficients

    res = np.zeros(len(y))
    for idx in range(len(y)):
        b, e = coef[idx], err[idx]
        if b == 0.0:
            res[idx] = max(0.0, abs(e) - eps)
        elif 0.0 < b < c:
            res[idx] = abs(e + eps)
        elif b == c:
            res[idx] = max(0.0, e + eps)
        elif -c < b < 0.0:
            res[idx] = abs(e - eps)
        else:  # b == -c
            res[idx] = max(0.0, -(e - eps))
    return res
