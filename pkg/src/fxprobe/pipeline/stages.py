"""Deterministic preprocessing stages: scaling, variance and correlation
filters, and top-K selection by coefficient magnitude."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np
from sklearn.base import BaseEstimator

from ..errors import InvalidData
from ..validation import check_array, check_is_fitted


@dataclass(frozen=True)
class FeatureMask:
    """Kept column indices (strictly increasing) plus drop provenance."""

    n_columns: int
    kept_indices: tuple
    dropped: dict = field(default_factory=dict)  # original index -> reason

    def __post_init__(self):
        kept = tuple(sorted(int(i) for i in self.kept_indices))
        if any(b <= a for a, b in zip(kept, kept[1:])):
            raise InvalidData("kept_indices contain duplicates")
        if set(kept) | set(self.dropped) != set(range(self.n_columns)):
            raise InvalidData("kept and dropped do not partition the columns")
        object.__setattr__(self, "kept_indices", kept)

    def apply(self, X: np.ndarray) -> np.ndarray:
        return np.asarray(X)[:, list(self.kept_indices)]

    def __len__(self) -> int:
        return len(self.kept_indices)


def population_variance(X: np.ndarray) -> np.ndarray:
    X = check_array(X)
    return X.var(axis=0)  # ddof=0: population convention throughout


class Standardizer(BaseEstimator):
    """Zero-mean/unit-variance scaling with population std.

    Constant columns pass through centered (the division is guarded) and are
    flagged in ``zero_variance_`` for the variance stage to pick up.
    """

    def fit(self, X, y=None):
        X = check_array(X)
        if X.shape[0] < 2:
            raise InvalidData("standardize needs at least 2 rows")
        self.means_ = X.mean(axis=0)
        self.stds_ = X.std(axis=0)
        self.zero_variance_ = tuple(int(j) for j in np.nonzero(self.stds_ == 0.0)[0])
        return self

    def transform(self, X) -> np.ndarray:
        check_is_fitted(self, "means_")
        X = check_array(X)
        safe = np.where(self.stds_ == 0.0, 1.0, self.stds_)
        return (X - self.means_) / safe

    def fit_transform(self, X, y=None) -> np.ndarray:
        return self.fit(X).transform(X)


class VarianceThreshold(BaseEstimator):
    """Drop columns whose population variance is strictly below ``eps``.

    Variances are computed on the data handed to ``fit`` -- in the standard
    pipeline that is the raw, pre-standardized matrix.
    """

    def __init__(self, eps: float = 1e-6):
        self.eps = eps

    def fit(self, X, y=None):
        X = check_array(X)
        variances = population_variance(X)
        kept = [j for j in range(X.shape[1]) if variances[j] >= self.eps]
        dropped = {
            j: f"variance {variances[j]!r} < {self.eps!r}"
            for j in range(X.shape[1])
            if variances[j] < self.eps
        }
        self.variances_ = variances
        self.mask_ = FeatureMask(X.shape[1], tuple(kept), dropped)
        return self

    def transform(self, X) -> np.ndarray:
        check_is_fitted(self, "mask_")
        return self.mask_.apply(check_array(X))


class CorrelationPruner(BaseEstimator):
    """Iteratively drop the later column of pairs with |pearson r| > threshold.

    Pairs (i, j), i < j, are scanned in lexicographic order over columns
    still alive; the pass repeats until it drops nothing, which makes the
    survivor set independent of any dictionary iteration quirks.
    """

    def __init__(self, threshold: float = 0.95):
        self.threshold = threshold

    def fit(self, X, y=None):
        X = check_array(X)
        p = X.shape[1]
        corr = _pearson_matrix(X)
        alive = np.ones(p, dtype=bool)
        dropped: dict[int, str] = {}
        changed = True
        while changed:
            changed = False
            for i in range(p):
                if not alive[i]:
                    continue
                for j in range(i + 1, p):
                    if not alive[j]:
                        continue
                    if abs(corr[i, j]) > self.threshold:
                        alive[j] = False
                        dropped[j] = f"|r|={abs(corr[i, j])!r} with column {i}"
                        changed = True
        kept = tuple(int(j) for j in np.nonzero(alive)[0])
        self.mask_ = FeatureMask(p, kept, dropped)
        return self

    def transform(self, X) -> np.ndarray:
        check_is_fitted(self, "mask_")
        return self.mask_.apply(check_array(X))


def _pearson_matrix(X: np.ndarray) -> np.ndarray:
    centered = X - X.mean(axis=0)
    stds = X.std(axis=0)
    n = X.shape[0]
    cov = centered.T @ centered / n
    denom = np.outer(stds, stds)
    with np.errstate(invalid="ignore", divide="ignore"):
        corr = np.where(denom > 0.0, cov / np.where(denom > 0.0, denom, 1.0), 0.0)
    return corr


def select_top_k(coefficients, k: int = 25) -> FeatureMask:
    """Keep the k features of largest |coefficient|; ties go to lower index.

    With fewer than k nonzero coefficients the remainder is filled from the
    zero-coefficient features in index order (with a warning); k larger than
    the feature count clamps.
    """
    coefficients = np.asarray(coefficients, dtype=np.float64)
    p = coefficients.shape[0]
    k_eff = min(k, p)
    order = sorted(range(p), key=lambda j: (-abs(coefficients[j]), j))
    chosen = order[:k_eff]
    n_nonzero = int(np.sum(coefficients != 0.0))
    if n_nonzero < k_eff:
        warnings.warn(
            f"only {n_nonzero} nonzero coefficients; filling to k={k_eff} "
            "from zero-coefficient features in index order",
            stacklevel=2,
        )
    dropped = {j: f"rank {order.index(j) + 1} beyond top {k_eff}" for j in order[k_eff:]}
    return FeatureMask(p, tuple(chosen), dropped)
