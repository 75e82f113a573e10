from .boosting import (
    ProbeConfig,
    TreeBoostClassifier,
    TreeBoostMultilabel,
    TreeBoostRegressor,
    train_classifier,
    train_multilabel,
    train_regressor,
)
from .metrics import (
    MetricReport,
    classification_metrics,
    evaluate,
    multilabel_metrics,
    per_class_f1,
    regression_metrics,
)
from .model_io import load_probe, save_probe
from .trees import RegressionTree, canonical_mean

__all__ = [
    "MetricReport", "ProbeConfig", "RegressionTree", "TreeBoostClassifier",
    "TreeBoostMultilabel", "TreeBoostRegressor", "canonical_mean",
    "classification_metrics", "evaluate", "load_probe", "multilabel_metrics",
    "per_class_f1", "regression_metrics", "save_probe", "train_classifier",
    "train_multilabel", "train_regressor",
]
