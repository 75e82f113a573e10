"""Depth-limited regression trees with exact greedy variance-reduction splits.

Split search scans features in ascending index order and candidate
thresholds (midpoints of consecutive distinct sorted values) in ascending
order, keeping the first strictly-best gain, so ties resolve to the lowest
feature index, then the lowest threshold.

Every reduction over rows (prefix sums, leaf means) runs in a canonical
order -- rows sorted by (feature value, residual), or residuals sorted
outright -- which makes training bit-identical under row permutation.
"""

from __future__ import annotations

import numpy as np

LEAF = -1


def canonical_mean(values: np.ndarray) -> float:
    """Mean accumulated over sorted values; invariant to input order."""
    if values.size == 0:
        return 0.0
    return float(np.sort(values).sum() / values.size)


class RegressionTree:
    """Flat-array binary tree fit to residuals by squared-error reduction."""

    def __init__(self, max_depth: int, min_samples_leaf: int):
        self.max_depth = max_depth
        self.min_samples_leaf = min_samples_leaf
        self.feature: list[int] = []
        self.threshold: list[float] = []
        self.left: list[int] = []
        self.right: list[int] = []
        self.value: list[float] = []

    def fit(self, X: np.ndarray, residuals: np.ndarray) -> "RegressionTree":
        self._build(X, residuals, np.arange(X.shape[0]), depth=0)
        return self

    def _new_node(self) -> int:
        self.feature.append(LEAF)
        self.threshold.append(0.0)
        self.left.append(-1)
        self.right.append(-1)
        self.value.append(0.0)
        return len(self.feature) - 1

    def _build(self, X, r, idx, depth) -> int:
        node = self._new_node()
        if depth >= self.max_depth or idx.size < 2 * self.min_samples_leaf:
            self.value[node] = canonical_mean(r[idx])
            return node
        split = self._best_split(X, r, idx)
        if split is None:
            self.value[node] = canonical_mean(r[idx])
            return node
        feature, threshold = split
        mask = X[idx, feature] <= threshold
        left_idx, right_idx = idx[mask], idx[~mask]
        self.feature[node] = feature
        self.threshold[node] = threshold
        self.left[node] = self._build(X, r, left_idx, depth + 1)
        self.right[node] = self._build(X, r, right_idx, depth + 1)
        return node

    def _best_split(self, X, r, idx):
        n = idx.size
        rows = r[idx]
        best_gain = 0.0
        best: tuple[int, float] | None = None
        for j in range(X.shape[1]):
            vals = X[idx, j]
            order = np.lexsort((rows, vals))
            sv = vals[order]
            sr = rows[order]
            prefix = np.cumsum(sr)
            total = prefix[-1]
            boundaries = np.nonzero(sv[:-1] != sv[1:])[0]
            for p in boundaries:
                n_left = p + 1
                n_right = n - n_left
                if n_left < self.min_samples_leaf or n_right < self.min_samples_leaf:
                    continue
                s_left = prefix[p]
                s_right = total - s_left
                gain = s_left * s_left / n_left + s_right * s_right / n_right - total * total / n
                if gain > best_gain:
                    threshold = 0.5 * (sv[p] + sv[p + 1])
                    if threshold >= sv[p + 1]:  # midpoint rounded up to the right value
                        threshold = float(sv[p])
                    best_gain = gain
                    best = (j, float(threshold))
        return best

    def predict(self, X: np.ndarray) -> np.ndarray:
        out = np.empty(X.shape[0])
        self._walk(0, X, np.arange(X.shape[0]), out)
        return out

    def _walk(self, node, X, idx, out) -> None:
        if self.feature[node] == LEAF:
            out[idx] = self.value[node]
            return
        mask = X[idx, self.feature[node]] <= self.threshold[node]
        self._walk(self.left[node], X, idx[mask], out)
        self._walk(self.right[node], X, idx[~mask], out)

    @property
    def n_nodes(self) -> int:
        return len(self.feature)
