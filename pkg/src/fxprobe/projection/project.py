"""2-D projection estimators: neighbor embedding and the PCA fallback."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, replace

import numpy as np
from sklearn.base import BaseEstimator

from ..errors import InvalidData
from ..validation import check_array
from .knn import fuzzy_graph, knn_graph
from .layout import fit_curve_params, make_epochs_per_sample, optimize_layout, spectral_init

_METHODS = ("neighbor_embed", "pca")


@dataclass(frozen=True)
class ProjectionConfig:
    method: str = "neighbor_embed"
    metric: str = "cosine"
    n_neighbors: int = 30
    min_dist: float = 0.5
    n_epochs: int = 200
    init: str = "spectral"
    seed: int = 42
    negative_sample_rate: int = 5
    spread: float = 1.0
    learning_rate: float = 1.0

    def __post_init__(self):
        if self.method not in _METHODS:
            raise InvalidData(f"method must be one of {_METHODS}, got {self.method!r}")
        if self.metric != "cosine":
            raise InvalidData("only the cosine metric is supported")
        if not 0.0 < self.min_dist <= 1.0:
            raise InvalidData(f"min_dist must be in (0, 1], got {self.min_dist}")
        if self.n_neighbors < 1:
            raise InvalidData(f"n_neighbors must be >= 1, got {self.n_neighbors}")


def pca_coords(X: np.ndarray, dim: int = 2) -> np.ndarray:
    """Centered SVD projection with a deterministic sign convention."""
    X = check_array(X)
    centered = X - X.mean(axis=0)
    _, _, vt = np.linalg.svd(centered, full_matrices=False)
    components = vt[:dim].copy()
    if components.shape[0] < dim:
        components = np.vstack([components, np.zeros((dim - components.shape[0], X.shape[1]))])
    for c in range(components.shape[0]):
        row = components[c]
        nonzero = np.nonzero(np.abs(row) > 1e-12)[0]
        if nonzero.size and row[nonzero[0]] < 0.0:
            components[c] = -row
    return centered @ components.T


def project(X, cfg: ProjectionConfig = ProjectionConfig()) -> np.ndarray:
    """Project rows of X to 2-D. Deterministic for a given config seed.

    With ``n_epochs == 0`` the spectral (or PCA) initialization is returned
    exactly. If there are fewer than n_neighbors+1 points, k shrinks to n-1
    with a warning.
    """
    X = check_array(X)
    if X.shape[1] < 2:
        raise InvalidData(f"need at least 2 feature columns, got {X.shape[1]}")
    if cfg.method == "pca":
        return pca_coords(X, 2)

    n = X.shape[0]
    k = cfg.n_neighbors
    if n < k + 1:
        k = n - 1
        warnings.warn(f"only {n} points; reducing n_neighbors to {k}", stacklevel=2)
        if k < 1:
            raise InvalidData("neighbor embedding needs at least 2 points")
    indices, dists = knn_graph(X, k)
    graph = fuzzy_graph(indices, dists)
    embedding = spectral_init(graph, dim=2)
    if cfg.n_epochs == 0:
        return embedding

    coo = graph.tocoo()
    coo.sum_duplicates()
    weights = coo.data.copy()
    # drop edges sampled less than once over the run, as the reference does
    weights[weights < weights.max() / float(cfg.n_epochs)] = 0.0
    keep = weights > 0.0
    head = coo.row[keep].astype(np.int64)
    tail = coo.col[keep].astype(np.int64)
    epochs_per_sample = make_epochs_per_sample(weights[keep], cfg.n_epochs)
    a, b = fit_curve_params(cfg.spread, cfg.min_dist)
    return optimize_layout(
        embedding.copy(), head, tail, epochs_per_sample, cfg.n_epochs, n,
        a, b, 1.0, cfg.learning_rate, float(cfg.negative_sample_rate), cfg.seed,
    )


class NeighborEmbedding(BaseEstimator):
    """Estimator facade over :func:`project` (neighbor-embedding method)."""

    def __init__(self, n_neighbors=30, min_dist=0.5, n_epochs=200, seed=42,
                 negative_sample_rate=5, spread=1.0, learning_rate=1.0):
        self.n_neighbors = n_neighbors
        self.min_dist = min_dist
        self.n_epochs = n_epochs
        self.seed = seed
        self.negative_sample_rate = negative_sample_rate
        self.spread = spread
        self.learning_rate = learning_rate

    def _config(self) -> ProjectionConfig:
        return ProjectionConfig(
            method="neighbor_embed", n_neighbors=self.n_neighbors, min_dist=self.min_dist,
            n_epochs=self.n_epochs, seed=self.seed,
            negative_sample_rate=self.negative_sample_rate, spread=self.spread,
            learning_rate=self.learning_rate,
        )

    def fit(self, X, y=None):
        self.embedding_ = project(X, self._config())
        return self

    def fit_transform(self, X, y=None) -> np.ndarray:
        return self.fit(X).embedding_


class PCAProjection(BaseEstimator):
    """Rank-2 PCA projection; supports transforming new points."""

    def fit(self, X, y=None):
        X = check_array(X)
        self.mean_ = X.mean(axis=0)
        _, _, vt = np.linalg.svd(X - self.mean_, full_matrices=False)
        components = vt[:2].copy()
        if components.shape[0] < 2:
            components = np.vstack([components, np.zeros((2 - components.shape[0], X.shape[1]))])
        for c in range(components.shape[0]):
            row = components[c]
            nonzero = np.nonzero(np.abs(row) > 1e-12)[0]
            if nonzero.size and row[nonzero[0]] < 0.0:
                components[c] = -row
        self.components_ = components
        self.embedding_ = (X - self.mean_) @ components.T
        return self

    def transform(self, X) -> np.ndarray:
        return (check_array(X) - self.mean_) @ self.components_.T

    def fit_transform(self, X, y=None) -> np.ndarray:
        return self.fit(X).embedding_


def config_for_method(method: str, seed: int = 42, **overrides) -> ProjectionConfig:
    return replace(ProjectionConfig(seed=seed), method=method, **overrides)
