from .elastic_net import (
    ElasticNetCV,
    ElasticNetResult,
    PipelineConfig,
    contiguous_folds,
    coordinate_descent,
    elastic_net_cv,
    elastic_net_objective,
    soft_threshold,
)
from .logistic import (
    LogisticNetResult,
    logistic_elastic_net,
    logistic_elastic_net_ovr,
    logistic_objective,
)
from .selection import FeatureSelectionPipeline
from .stages import (
    CorrelationPruner,
    FeatureMask,
    Standardizer,
    VarianceThreshold,
    population_variance,
    select_top_k,
)

__all__ = [
    "CorrelationPruner", "ElasticNetCV", "ElasticNetResult", "FeatureMask",
    "FeatureSelectionPipeline", "LogisticNetResult", "PipelineConfig",
    "Standardizer", "VarianceThreshold", "contiguous_folds",
    "coordinate_descent", "elastic_net_cv", "elastic_net_objective",
    "logistic_elastic_net", "logistic_elastic_net_ovr", "logistic_objective",
    "population_variance", "select_top_k", "soft_threshold",
]
