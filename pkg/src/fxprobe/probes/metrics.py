"""Metric suites for the three probe tasks.

Weighted classification scores weight each class's value by its true-class
support; support-weighted recall therefore equals plain accuracy. Divisions
by zero report 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import InvalidData


@dataclass
class MetricReport:
    regression: dict = field(default_factory=dict)
    classification: dict = field(default_factory=dict)
    multilabel: dict = field(default_factory=dict)

    def flat(self) -> dict:
        out = {}
        out.update(self.regression)
        out.update(self.classification)
        out.update(self.multilabel)
        return out


def regression_metrics(y_true, y_pred) -> dict:
    y_true = np.asarray(y_true, dtype=np.float64)
    y_pred = np.asarray(y_pred, dtype=np.float64)
    err = y_pred - y_true
    mae = float(np.abs(err).mean())
    mse = float((err**2).mean())
    ss_res = float((err**2).sum())
    ss_tot = float(((y_true - y_true.mean()) ** 2).sum())
    r2 = 0.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    return {"mae": mae, "mse": mse, "r2": r2}


def _safe_div(a: float, b: float) -> float:
    return a / b if b else 0.0


def classification_metrics(y_true, y_pred, classes=None) -> dict:
    y_true = np.asarray([str(v) for v in y_true])
    y_pred = np.asarray([str(v) for v in y_pred])
    if y_true.shape != y_pred.shape:
        raise InvalidData("y_true and y_pred disagree on shape")
    if classes is None:
        classes = sorted(set(y_true) | set(y_pred))
    n = y_true.shape[0]
    accuracy = float((y_true == y_pred).mean()) if n else 0.0
    precision = recall = f1 = 0.0
    for c in classes:
        tp = float(np.sum((y_true == c) & (y_pred == c)))
        fp = float(np.sum((y_true != c) & (y_pred == c)))
        fn = float(np.sum((y_true == c) & (y_pred != c)))
        support = tp + fn
        weight = support / n if n else 0.0
        p = _safe_div(tp, tp + fp)
        r = _safe_div(tp, tp + fn)
        precision += weight * p
        recall += weight * r
        f1 += weight * _safe_div(2.0 * p * r, p + r)
    return {"accuracy": accuracy, "precision": precision, "recall": recall, "f1": f1}


def per_class_f1(y_true, y_pred, classes) -> dict:
    y_true = np.asarray([str(v) for v in y_true])
    y_pred = np.asarray([str(v) for v in y_pred])
    out = {}
    for c in classes:
        tp = float(np.sum((y_true == c) & (y_pred == c)))
        fp = float(np.sum((y_true != c) & (y_pred == c)))
        fn = float(np.sum((y_true == c) & (y_pred != c)))
        p = _safe_div(tp, tp + fp)
        r = _safe_div(tp, tp + fn)
        out[c] = _safe_div(2.0 * p * r, p + r)
    return out


def multilabel_metrics(Y_true, Y_pred) -> dict:
    Y_true = np.asarray(Y_true, dtype=np.int64)
    Y_pred = np.asarray(Y_pred, dtype=np.int64)
    if Y_true.shape != Y_pred.shape:
        raise InvalidData("Y_true and Y_pred disagree on shape")
    tp = float(np.sum((Y_true == 1) & (Y_pred == 1)))
    fp = float(np.sum((Y_true == 0) & (Y_pred == 1)))
    fn = float(np.sum((Y_true == 1) & (Y_pred == 0)))
    micro_p = _safe_div(tp, tp + fp)
    micro_r = _safe_div(tp, tp + fn)
    f1_micro = _safe_div(2.0 * micro_p * micro_r, micro_p + micro_r)
    per_label = []
    for j in range(Y_true.shape[1]):
        tp_j = float(np.sum((Y_true[:, j] == 1) & (Y_pred[:, j] == 1)))
        fp_j = float(np.sum((Y_true[:, j] == 0) & (Y_pred[:, j] == 1)))
        fn_j = float(np.sum((Y_true[:, j] == 1) & (Y_pred[:, j] == 0)))
        p = _safe_div(tp_j, tp_j + fp_j)
        r = _safe_div(tp_j, tp_j + fn_j)
        per_label.append(_safe_div(2.0 * p * r, p + r))
    return {"f1_micro": f1_micro, "f1_macro": float(np.mean(per_label))}


def evaluate(model, X, truth) -> MetricReport:
    """Score a fitted probe against ground truth, dispatching on its task."""
    report = MetricReport()
    if model.task == "regression":
        report.regression = regression_metrics(truth, model.predict(X))
    elif model.task == "single_label":
        report.classification = classification_metrics(truth, model.predict(X), model.classes_)
    elif model.task == "multi_label":
        report.multilabel = multilabel_metrics(truth, model.predict(X))
    else:
        raise InvalidData(f"unknown probe task {model.task!r}")
    return report
