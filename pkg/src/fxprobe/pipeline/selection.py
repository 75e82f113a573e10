"""The full feature-selection chain with per-stage provenance.

Stage order is fixed: standardize -> variance threshold (on raw variances)
-> iterative correlation pruning -> elastic-net selection -> top-K. The
provenance report records every dropped column and why.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator

from ..errors import InvalidData
from ..validation import check_array, check_is_fitted
from .elastic_net import PipelineConfig, elastic_net_cv
from .logistic import logistic_elastic_net_ovr
from .stages import CorrelationPruner, FeatureMask, Standardizer, VarianceThreshold, select_top_k

TASKS = ("regression", "classification", "multilabel")


class FeatureSelectionPipeline(BaseEstimator):
    """Standardize, filter, and select the top-K original columns.

    ``transform`` re-applies the fitted scaling and the composite mask, so
    downstream projection always sees the same K columns.
    """

    def __init__(self, task: str = "regression", config: PipelineConfig = PipelineConfig()):
        self.task = task
        self.config = config

    def fit(self, X, y):
        if self.task not in TASKS:
            raise InvalidData(f"task must be one of {TASKS}, got {self.task!r}")
        X = check_array(X)
        cfg = self.config
        provenance: list[tuple[str, str, str, str]] = []

        self.standardizer_ = Standardizer().fit(X)
        X_std = self.standardizer_.transform(X)
        for j in self.standardizer_.zero_variance_:
            provenance.append(("standardize", str(j), "flag", "zero variance (centered only)"))

        self.variance_ = VarianceThreshold(cfg.variance_eps).fit(X)
        var_mask = self.variance_.mask_
        for j, reason in sorted(var_mask.dropped.items()):
            provenance.append(("variance", str(j), "drop", reason))
        X_var = var_mask.apply(X_std)
        survivors = list(var_mask.kept_indices)

        self.pruner_ = CorrelationPruner(cfg.corr_threshold).fit(X_var)
        corr_mask = self.pruner_.mask_
        for j, reason in sorted(corr_mask.dropped.items()):
            provenance.append(("correlation", str(survivors[j]), "drop", reason))
        X_corr = corr_mask.apply(X_var)
        survivors = [survivors[j] for j in corr_mask.kept_indices]

        coefficients = self._select_coefficients(X_corr, y, provenance)

        k = min(cfg.top_k, len(survivors))
        if k < cfg.top_k:
            provenance.append(("top_k", "-", "clamp", f"top_k {cfg.top_k} clamped to {k}"))
        topk_mask = select_top_k(coefficients, k)
        for j, reason in sorted(topk_mask.dropped.items()):
            provenance.append(("top_k", str(survivors[j]), "drop", reason))

        kept_original = tuple(survivors[j] for j in topk_mask.kept_indices)
        all_dropped: dict[int, str] = {}
        for stage, col, action, reason in provenance:
            if action == "drop" and col != "-":
                all_dropped[int(col)] = f"{stage}: {reason}"
        self.mask_ = FeatureMask(X.shape[1], kept_original, all_dropped)
        self.coefficients_ = coefficients
        self.survivors_before_topk_ = tuple(survivors)
        self.provenance_ = provenance
        return self

    def _select_coefficients(self, X_corr, y, provenance) -> np.ndarray:
        cfg = self.config
        if self.task == "regression":
            y = np.asarray(y, dtype=np.float64)
            if y.ndim != 1:
                raise InvalidData("regression selection expects a single target; loop per target")
            result = elastic_net_cv(X_corr, y, cfg)
            provenance.append(
                ("elastic_net", "-", "info",
                 f"best_alpha={result.best_alpha!r} best_l1_ratio={result.best_l1_ratio!r}")
            )
            self.elastic_net_result_ = result
            return result.coefficients
        aggregated, per_problem = logistic_elastic_net_ovr(
            X_corr, y, C=cfg.clf_C, l1_ratio=cfg.clf_l1_ratio,
            max_iter=cfg.clf_max_iter, tol=cfg.tol,
        )
        provenance.append(
            ("logistic_net", "-", "info",
             f"C={cfg.clf_C!r} l1_ratio={cfg.clf_l1_ratio!r} problems={len(per_problem)}")
        )
        self.logistic_problems_ = per_problem
        return aggregated

    def transform(self, X) -> np.ndarray:
        check_is_fitted(self, "mask_")
        return self.mask_.apply(self.standardizer_.transform(X))

    def fit_transform(self, X, y) -> np.ndarray:
        return self.fit(X, y).transform(X)

    def provenance_text(self) -> str:
        check_is_fitted(self, "mask_")
        lines = [f"#fxpipeline v1 task={self.task}", "stage,column,action,reason"]
        for stage, col, action, reason in self.provenance_:
            reason_csv = reason.replace(",", ";")
            lines.append(f"{stage},{col},{action},{reason_csv}")
        lines.append(f"kept,{'|'.join(str(i) for i in self.mask_.kept_indices)},info,final mask")
        return "\n".join(lines) + "\n"
