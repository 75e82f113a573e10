"""Spectral initialization and the 2-D layout optimizer.

The layout minimizes the usual attract/repel cross-entropy over graph
edges with negative sampling. Randomness comes from an xorshift generator
seeded inside the kernel, so a seed fully determines the result; the loop
is single-threaded on purpose (reproducibility over speed).
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np
from numba import njit
from scipy.optimize import curve_fit


def spectral_init(graph, dim: int = 2, scale: float = 10.0) -> np.ndarray:
    """Eigenvectors 2..dim+1 of the symmetric normalized Laplacian.

    Sign convention: first nonzero component of each eigenvector positive.
    Coordinates are scaled so the largest magnitude equals ``scale``.
    """
    W = np.asarray(graph.todense(), dtype=np.float64) if hasattr(graph, "todense") else np.asarray(graph, dtype=np.float64)
    n = W.shape[0]
    deg = W.sum(axis=1)
    inv_sqrt = np.where(deg > 0.0, 1.0 / np.sqrt(np.where(deg > 0.0, deg, 1.0)), 0.0)
    lap = np.eye(n) - (inv_sqrt[:, np.newaxis] * W) * inv_sqrt[np.newaxis, :]
    lap = (lap + lap.T) / 2.0  # exact symmetry for eigh
    _, vecs = np.linalg.eigh(lap)
    coords = vecs[:, 1 : dim + 1].copy()
    for c in range(coords.shape[1]):
        col = coords[:, c]
        nonzero = np.nonzero(np.abs(col) > 1e-12)[0]
        if nonzero.size and col[nonzero[0]] < 0.0:
            coords[:, c] = -col
    top = np.abs(coords).max()
    if top > 0.0:
        coords *= scale / top
    return coords


def _reference_curve(x, a, b):
    return 1.0 / (1.0 + a * x ** (2.0 * b))


@lru_cache(maxsize=None)
def fit_curve_params(spread: float = 1.0, min_dist: float = 0.5) -> tuple[float, float]:
    """Least-squares (a, b) so 1/(1+a x^(2b)) tracks the offset exponential."""
    xv = np.linspace(0.0, spread * 3.0, 300)
    yv = np.where(xv < min_dist, 1.0, np.exp(-(xv - min_dist) / spread))
    (a, b), _ = curve_fit(_reference_curve, xv, yv)
    return float(a), float(b)


def make_epochs_per_sample(weights: np.ndarray, n_epochs: int) -> np.ndarray:
    result = -1.0 * np.ones(weights.shape[0])
    n_samples = n_epochs * (weights / weights.max())
    result[n_samples > 0] = float(n_epochs) / n_samples[n_samples > 0]
    return result


@njit(cache=True, inline="always")
def _xorshift(state: np.uint64) -> np.uint64:
    state ^= state << np.uint64(13)
    state ^= state >> np.uint64(7)
    state ^= state << np.uint64(17)
    return state


@njit(cache=True)
def _clip(val: float) -> float:
    if val > 4.0:
        return 4.0
    if val < -4.0:
        return -4.0
    return val


@njit(cache=True)
def optimize_layout(embedding, head, tail, epochs_per_sample, n_epochs, n_vertices,
                    a, b, gamma, initial_alpha, negative_sample_rate, seed):
    state = np.uint64(seed * np.uint64(2654435761) + np.uint64(0x9E3779B97F4A7C15))
    if state == np.uint64(0):
        state = np.uint64(0x106689D45497FDB5)
    alpha = initial_alpha
    epochs_per_negative_sample = epochs_per_sample / negative_sample_rate
    epoch_of_next_negative_sample = epochs_per_negative_sample.copy()
    epoch_of_next_sample = epochs_per_sample.copy()

    for n in range(n_epochs):
        for i in range(epochs_per_sample.shape[0]):
            if epoch_of_next_sample[i] <= n:
                j = head[i]
                k = tail[i]
                dx = embedding[j, 0] - embedding[k, 0]
                dy = embedding[j, 1] - embedding[k, 1]
                dist_sq = dx * dx + dy * dy
                if dist_sq > 0.0:
                    coeff = (-2.0 * a * b * dist_sq ** (b - 1.0)) / (a * dist_sq**b + 1.0)
                else:
                    coeff = 0.0
                gx = _clip(coeff * dx) * alpha
                gy = _clip(coeff * dy) * alpha
                embedding[j, 0] += gx
                embedding[j, 1] += gy
                embedding[k, 0] -= gx
                embedding[k, 1] -= gy

                epoch_of_next_sample[i] += epochs_per_sample[i]
                n_neg = int((n - epoch_of_next_negative_sample[i]) / epochs_per_negative_sample[i])
                for _ in range(n_neg):
                    state = _xorshift(state)
                    k = int(state % np.uint64(n_vertices))
                    dx = embedding[j, 0] - embedding[k, 0]
                    dy = embedding[j, 1] - embedding[k, 1]
                    dist_sq = dx * dx + dy * dy
                    if k == j:
                        continue
                    coeff = (2.0 * gamma * b) / ((0.001 + dist_sq) * (a * dist_sq**b + 1.0))
                    embedding[j, 0] += _clip(coeff * dx) * alpha
                    embedding[j, 1] += _clip(coeff * dy) * alpha
                epoch_of_next_negative_sample[i] += n_neg * epochs_per_negative_sample[i]
        alpha = initial_alpha * (1.0 - (n + 1.0) / n_epochs)
    return embedding
