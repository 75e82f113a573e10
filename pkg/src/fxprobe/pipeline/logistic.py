"""L1/L2-penalized logistic regression by proximal gradient with backtracking.

Objective, with labels in {-1, +1} and an unpenalized intercept b:

    sum_i log(1 + exp(-y_i (x_i . beta + b)))
        + (1/C) * (l1 * ||beta||_1 + (1 - l1)/2 * ||beta||^2)

Each accepted step satisfies the quadratic majorization bound, so the
objective is non-increasing; iteration stops when the relative objective
change drops below tol.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.special import expit

from ..errors import InvalidData
from ..validation import check_array


def _log1pexp(z: np.ndarray) -> np.ndarray:
    return np.logaddexp(0.0, z)


@dataclass
class LogisticNetResult:
    coefficients: np.ndarray
    intercept: float
    objective_trace: list = field(default_factory=list)


def logistic_objective(X, y_signed, beta, intercept, C, l1_ratio) -> float:
    margins = y_signed * (X @ beta + intercept)
    penalty = (np.abs(beta).sum() * l1_ratio + 0.5 * (1.0 - l1_ratio) * (beta @ beta)) / C
    return float(_log1pexp(-margins).sum() + penalty)


def logistic_elastic_net(
    X,
    y_binary,
    C: float = 0.5,
    l1_ratio: float = 0.5,
    max_iter: int = 6000,
    tol: float = 2e-3,
) -> LogisticNetResult:
    X = check_array(X)
    y = np.asarray(y_binary, dtype=np.float64)
    if set(np.unique(y)) - {0.0, 1.0}:
        raise InvalidData("y_binary must be 0/1")
    y_signed = 2.0 * y - 1.0
    n, p = X.shape

    beta = np.zeros(p)
    intercept = 0.0
    l1_strength = l1_ratio / C
    l2_strength = (1.0 - l1_ratio) / C

    def smooth_value(b, b0):
        margins = y_signed * (X @ b + b0)
        return float(_log1pexp(-margins).sum() + 0.5 * l2_strength * (b @ b))

    def smooth_grad(b, b0):
        margins = y_signed * (X @ b + b0)
        weights = -y_signed * expit(-margins)
        return X.T @ weights + l2_strength * b, float(weights.sum())

    trace = [logistic_objective(X, y_signed, beta, intercept, C, l1_ratio)]
    step = 1.0
    for _ in range(max_iter):
        g_val = smooth_value(beta, intercept)
        g_beta, g_b0 = smooth_grad(beta, intercept)
        while True:
            cand_beta = beta - step * g_beta
            cand_beta = np.sign(cand_beta) * np.maximum(np.abs(cand_beta) - step * l1_strength, 0.0)
            cand_b0 = intercept - step * g_b0
            d_beta = cand_beta - beta
            d_b0 = cand_b0 - intercept
            quad = g_val + g_beta @ d_beta + g_b0 * d_b0 + (d_beta @ d_beta + d_b0 * d_b0) / (2.0 * step)
            if smooth_value(cand_beta, cand_b0) <= quad + 1e-12:
                break
            step *= 0.5
            if step < 1e-16:
                break
        beta, intercept = cand_beta, cand_b0
        obj = logistic_objective(X, y_signed, beta, intercept, C, l1_ratio)
        trace.append(obj)
        prev = trace[-2]
        if abs(prev - obj) < tol * max(abs(prev), 1e-12):
            break
    return LogisticNetResult(beta, intercept, trace)


def logistic_elastic_net_ovr(
    X,
    labels,
    C: float = 0.5,
    l1_ratio: float = 0.5,
    max_iter: int = 6000,
    tol: float = 2e-3,
):
    """One-vs-rest over a label vector (multi-class) or 0/1 matrix (multi-label).

    Per-feature scores aggregate as max |beta| across the binary problems,
    giving one ranking vector for top-K selection.
    """
    X = check_array(X)
    labels = np.asarray(labels)
    if labels.ndim == 1:
        classes = [str(c) for c in np.unique(labels)]
        if len(classes) < 2:
            raise InvalidData("one-vs-rest needs at least 2 classes")
        text = np.asarray([str(v) for v in labels])
        columns = {c: (text == c).astype(np.float64) for c in classes}
    else:
        columns = {f"label{j}": labels[:, j].astype(np.float64) for j in range(labels.shape[1])}

    per_problem: dict[str, LogisticNetResult] = {}
    for name, y_col in columns.items():
        if np.all(y_col == y_col[0]):
            per_problem[name] = LogisticNetResult(np.zeros(X.shape[1]), 0.0, [0.0])
        else:
            per_problem[name] = logistic_elastic_net(X, y_col, C, l1_ratio, max_iter, tol)
    stacked = np.stack([res.coefficients for res in per_problem.values()])
    aggregated = np.abs(stacked).max(axis=0)
    return aggregated, per_problem
