"""Exact cosine kNN and the fuzzy neighborhood graph.

Brute force rather than trees: point counts here are desk scale, and an
exhaustive search is its own oracle. Zero vectors take cosine distance 1 to
everything by convention.
"""

from __future__ import annotations

import numpy as np
import scipy.sparse

from ..errors import InvalidData
from ..validation import check_array

_BISECTION_TOL = 1e-6
_BISECTION_ITER = 128


def cosine_distances(X: np.ndarray) -> np.ndarray:
    X = check_array(X)
    norms = np.sqrt((X * X).sum(axis=1))
    zero = norms == 0.0
    safe = np.where(zero, 1.0, norms)
    unit = X / safe[:, np.newaxis]
    sims = unit @ unit.T
    dists = 1.0 - sims
    dists[zero, :] = 1.0
    dists[:, zero] = 1.0
    np.fill_diagonal(dists, np.where(zero, 1.0, 0.0))
    return np.clip(dists, 0.0, 2.0)


def knn_graph(X, k: int = 30) -> tuple[np.ndarray, np.ndarray]:
    """Exact k nearest neighbors per point (self excluded), ties by index.

    Returns (indices, distances), each of shape (n, k), rows sorted by
    ascending (distance, index).
    """
    X = check_array(X)
    n = X.shape[0]
    if n < k + 1:
        raise InvalidData(f"need at least k+1={k + 1} points, got {n}")
    dists = cosine_distances(X)
    indices = np.empty((n, k), dtype=np.int64)
    out_d = np.empty((n, k))
    all_idx = np.arange(n)
    for i in range(n):
        others = all_idx[all_idx != i]
        order = np.lexsort((others, dists[i, others]))
        chosen = others[order[:k]]
        indices[i] = chosen
        out_d[i] = dists[i, chosen]
    return indices, out_d


def smooth_calibration(neighbor_dists: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Per-point (rho, sigma): rho is the nearest-neighbor distance and sigma
    solves sum_j exp(-max(0, d_ij - rho)/sigma) = log2(k) by bisection."""
    n, k = neighbor_dists.shape
    target = np.log2(k)
    rhos = neighbor_dists[:, 0].copy()
    sigmas = np.empty(n)
    for i in range(n):
        shifted = np.maximum(0.0, neighbor_dists[i] - rhos[i])
        lo, hi, mid = 0.0, np.inf, 1.0
        for _ in range(_BISECTION_ITER):
            val = np.exp(-shifted / mid).sum() if mid > 0 else float(np.sum(shifted == 0.0))
            if abs(val - target) < _BISECTION_TOL:
                break
            if val > target:
                hi = mid
                mid = (lo + hi) / 2.0
            else:
                lo = mid
                mid = mid * 2.0 if hi == np.inf else (lo + hi) / 2.0
        sigmas[i] = mid
    return rhos, sigmas


def fuzzy_graph(neighbor_indices: np.ndarray, neighbor_dists: np.ndarray) -> scipy.sparse.coo_matrix:
    """Weighted symmetric graph with w = w1 + w2 - w1*w2.

    Before symmetrization each point's nearest neighbor carries weight 1
    exactly (its distance equals rho, so the exponent is 0).
    """
    n, k = neighbor_indices.shape
    rhos, sigmas = smooth_calibration(neighbor_dists)
    rows = np.repeat(np.arange(n), k)
    cols = neighbor_indices.reshape(-1)
    shifted = np.maximum(0.0, neighbor_dists - rhos[:, np.newaxis])
    vals = np.exp(-shifted / sigmas[:, np.newaxis]).reshape(-1)
    W = scipy.sparse.coo_matrix((vals, (rows, cols)), shape=(n, n)).tocsr()
    Wt = W.T.tocsr()
    sym = W + Wt - W.multiply(Wt)
    return sym.tocoo()
