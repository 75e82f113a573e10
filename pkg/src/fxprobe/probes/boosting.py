"""Gradient-boosted tree probes over frozen embeddings.

Plain first-order gradient boosting (no second-order terms, no shrinkage
regularizers): squared error for regression, one-vs-rest logistic for
single- and multi-label classification. Deliberately simple so every
prediction is auditable and exactly reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, asdict

import numpy as np
from scipy.special import expit
from sklearn.base import BaseEstimator

from ..errors import DegenerateLabels, InvalidData
from ..validation import check_array, check_X_y
from .trees import RegressionTree, canonical_mean


@dataclass(frozen=True)
class ProbeConfig:
    n_trees: int = 50
    max_depth: int = 3
    learning_rate: float = 0.1
    min_samples_leaf: int = 2
    seed: int = 0

    def __post_init__(self):
        if self.n_trees < 1:
            raise InvalidData(f"n_trees must be >= 1, got {self.n_trees}")
        if self.max_depth < 0:
            raise InvalidData(f"max_depth must be >= 0, got {self.max_depth}")
        if not 0.0 < self.learning_rate <= 1.0:
            raise InvalidData(f"learning_rate must be in (0, 1], got {self.learning_rate}")
        if self.min_samples_leaf < 1:
            raise InvalidData(f"min_samples_leaf must be >= 1, got {self.min_samples_leaf}")


class _BoostedScore:
    """One additive ensemble: base score plus shrunken tree outputs."""

    def __init__(self, base_score: float):
        self.base_score = base_score
        self.trees: list[RegressionTree] = []

    def score(self, X: np.ndarray, learning_rate: float) -> np.ndarray:
        out = np.full(X.shape[0], self.base_score)
        for tree in self.trees:
            out += learning_rate * tree.predict(X)
        return out


def _fit_squared_error(X, y, cfg: ProbeConfig):
    booster = _BoostedScore(canonical_mean(y))
    losses = []
    current = np.full(y.shape[0], booster.base_score)
    losses.append(canonical_mean((y - current) ** 2))
    if np.all(y == y[0]):
        return booster, losses  # degenerate targets: base score only
    for _ in range(cfg.n_trees):
        residual = y - current
        tree = RegressionTree(cfg.max_depth, cfg.min_samples_leaf).fit(X, residual)
        current = current + cfg.learning_rate * tree.predict(X)
        booster.trees.append(tree)
        losses.append(canonical_mean((y - current) ** 2))
    return booster, losses


def _fit_logistic(X, positive: np.ndarray, cfg: ProbeConfig) -> _BoostedScore:
    n_pos = int(positive.sum())
    p = n_pos / positive.shape[0]
    booster = _BoostedScore(math.log(p / (1.0 - p)))
    current = np.full(positive.shape[0], booster.base_score)
    target = positive.astype(np.float64)
    for _ in range(cfg.n_trees):
        residual = target - expit(current)
        tree = RegressionTree(cfg.max_depth, cfg.min_samples_leaf).fit(X, residual)
        current = current + cfg.learning_rate * tree.predict(X)
        booster.trees.append(tree)
    return booster


class TreeBoostRegressor(BaseEstimator):
    """Boosted regression probe; `fit` records the training loss per tree."""

    task = "regression"

    def __init__(self, n_trees=50, max_depth=3, learning_rate=0.1, min_samples_leaf=2, seed=0):
        self.n_trees = n_trees
        self.max_depth = max_depth
        self.learning_rate = learning_rate
        self.min_samples_leaf = min_samples_leaf
        self.seed = seed

    def _config(self) -> ProbeConfig:
        return ProbeConfig(self.n_trees, self.max_depth, self.learning_rate,
                           self.min_samples_leaf, self.seed)

    def fit(self, X, y):
        X, y = check_X_y(X, y, y_numeric=True)
        if y.shape[0] < 2:
            raise InvalidData("need at least 2 training rows")
        cfg = self._config()
        self.booster_, self.train_loss_path_ = _fit_squared_error(X, y, cfg)
        self.n_features_in_ = X.shape[1]
        return self

    def predict(self, X) -> np.ndarray:
        X = check_array(X)
        return self.booster_.score(X, self.learning_rate)


class TreeBoostClassifier(BaseEstimator):
    """One-vs-rest boosted classifier; predicts argmax of class scores."""

    task = "single_label"

    def __init__(self, n_trees=50, max_depth=3, learning_rate=0.1, min_samples_leaf=2, seed=0):
        self.n_trees = n_trees
        self.max_depth = max_depth
        self.learning_rate = learning_rate
        self.min_samples_leaf = min_samples_leaf
        self.seed = seed

    def _config(self) -> ProbeConfig:
        return ProbeConfig(self.n_trees, self.max_depth, self.learning_rate,
                           self.min_samples_leaf, self.seed)

    def fit(self, X, y):
        X = check_array(X)
        y = np.asarray(y)
        if X.shape[0] != y.shape[0]:
            raise InvalidData("X and y disagree on row count")
        self.classes_ = [str(c) for c in np.unique(y)]
        if len(self.classes_) < 2:
            raise DegenerateLabels(f"need >= 2 classes, got {self.classes_}")
        cfg = self._config()
        labels = np.asarray([str(v) for v in y])
        self.boosters_ = [_fit_logistic(X, labels == c, cfg) for c in self.classes_]
        self.n_features_in_ = X.shape[1]
        return self

    def decision_scores(self, X) -> np.ndarray:
        X = check_array(X)
        return np.column_stack([b.score(X, self.learning_rate) for b in self.boosters_])

    def predict(self, X) -> np.ndarray:
        scores = self.decision_scores(X)
        # argmax keeps the first maximum, i.e. ties break by class order
        return np.asarray(self.classes_, dtype=object)[np.argmax(scores, axis=1)]


class TreeBoostMultilabel(BaseEstimator):
    """Independent binary booster per label, thresholded at sigmoid >= 0.5."""

    task = "multi_label"
    threshold = 0.5

    def __init__(self, n_trees=50, max_depth=3, learning_rate=0.1, min_samples_leaf=2, seed=0):
        self.n_trees = n_trees
        self.max_depth = max_depth
        self.learning_rate = learning_rate
        self.min_samples_leaf = min_samples_leaf
        self.seed = seed

    def _config(self) -> ProbeConfig:
        return ProbeConfig(self.n_trees, self.max_depth, self.learning_rate,
                           self.min_samples_leaf, self.seed)

    def fit(self, X, Y, label_names=None):
        X = check_array(X)
        Y = np.asarray(Y)
        if Y.ndim != 2 or Y.shape[1] < 1:
            raise InvalidData(f"Y must be (rows, labels) with >= 1 label, got shape {Y.shape}")
        if X.shape[0] != Y.shape[0]:
            raise InvalidData("X and Y disagree on row count")
        self.label_names_ = list(label_names) if label_names else [f"label{j}" for j in range(Y.shape[1])]
        cfg = self._config()
        self.boosters_ = []
        self.constants_ = []
        for j in range(Y.shape[1]):
            col = Y[:, j].astype(np.float64)
            if np.all(col == col[0]):
                self.boosters_.append(None)
                self.constants_.append(int(col[0]))
            else:
                self.boosters_.append(_fit_logistic(X, col > 0.5, cfg))
                self.constants_.append(None)
        self.n_features_in_ = X.shape[1]
        return self

    def predict(self, X) -> np.ndarray:
        X = check_array(X)
        out = np.zeros((X.shape[0], len(self.boosters_)), dtype=np.int64)
        for j, booster in enumerate(self.boosters_):
            if booster is None:
                out[:, j] = self.constants_[j]
            else:
                out[:, j] = (expit(booster.score(X, self.learning_rate)) >= self.threshold).astype(np.int64)
        return out


def train_regressor(X, y, cfg: ProbeConfig = ProbeConfig()) -> TreeBoostRegressor:
    return TreeBoostRegressor(**asdict(cfg)).fit(X, y)


def train_classifier(X, y, cfg: ProbeConfig = ProbeConfig()) -> TreeBoostClassifier:
    return TreeBoostClassifier(**asdict(cfg)).fit(X, y)


def train_multilabel(X, Y, cfg: ProbeConfig = ProbeConfig(), label_names=None) -> TreeBoostMultilabel:
    return TreeBoostMultilabel(**asdict(cfg)).fit(X, Y, label_names=label_names)
