"""The four experiment operations.

exp1: frozen clean-trained probes re-evaluated under each (fx, level).
exp2: predicted-label counts per intensity level (radar data).
exp3: feature selection to top-K, joint 2-D projection, ladder trajectories.
exp4: the same trajectory machinery over real-world chain prefixes.

Probes are trained once on clean train-split embeddings and frozen for all
FX evaluations; the shared ConditionEmbedder cache guarantees that every
experiment references identical clean vectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..effects import FxKind, SCENARIO_NAMES, scenario_preset
from ..embedding import Condition, ConditionEmbedder
from ..errors import InvalidData
from ..manifest import DatasetManifest
from ..pipeline import FeatureSelectionPipeline, PipelineConfig
from ..probes import (
    ProbeConfig,
    classification_metrics,
    multilabel_metrics,
    regression_metrics,
    train_classifier,
    train_multilabel,
    train_regressor,
)
from ..projection import ProjectionConfig, Trajectory, TrajectorySet, project
from .reports import DeltaTable, RadarData
from .sampling import sample_tracks

DEFAULT_FX = tuple(FxKind)
DEFAULT_LEVELS = tuple(range(1, 11))


@dataclass(frozen=True)
class RunConfig:
    seed: int = 42
    jobs: int = 1
    fx: tuple = DEFAULT_FX
    levels: tuple = DEFAULT_LEVELS
    scenarios: tuple = SCENARIO_NAMES
    per_effect: int = 20
    per_label: int = 5
    per_tag: int = 3
    use_sample_for_shifts: bool = False


def _clean_matrix(embedder: ConditionEmbedder, rows):
    clean = Condition.clean()
    return np.stack([embedder.vector(r.track_id, clean) for r in rows])


def _condition_matrix(embedder, rows, condition):
    return np.stack([embedder.vector(r.track_id, condition) for r in rows])


def train_clean_probes(manifest: DatasetManifest, embedder: ConditionEmbedder,
                       probe_cfg: ProbeConfig = ProbeConfig()) -> dict:
    """Fit the task's probes on clean embeddings of the train split."""
    train_rows = manifest.split_rows("train")
    if len(train_rows) < 2:
        raise InvalidData(f"manifest {manifest.dataset_id} has too few train rows")
    X = _clean_matrix(embedder, train_rows)
    if manifest.task == "va_regression":
        return {
            target: train_regressor(X, np.array([r.labels[target] for r in train_rows]), probe_cfg)
            for target in ("valence", "arousal")
        }
    if manifest.task == "four_class":
        return {"label": train_classifier(X, [r.labels["label"] for r in train_rows], probe_cfg)}
    Y = np.array([[r.labels[tag] for tag in manifest.label_columns] for r in train_rows])
    return {"tags": train_multilabel(X, Y, probe_cfg, label_names=list(manifest.label_columns))}


def _metrics_for(manifest, probes, X, rows) -> dict:
    if manifest.task == "va_regression":
        out = {}
        for target, probe in probes.items():
            truth = np.array([r.labels[target] for r in rows])
            for name, value in regression_metrics(truth, probe.predict(X)).items():
                out[f"{name}_{target}"] = value
        return out
    if manifest.task == "four_class":
        probe = probes["label"]
        truth = [r.labels["label"] for r in rows]
        return classification_metrics(truth, probe.predict(X), probe.classes_)
    probe = probes["tags"]
    truth = np.array([[r.labels[tag] for tag in manifest.label_columns] for r in rows])
    return multilabel_metrics(truth, probe.predict(X))


@dataclass
class Exp1Result:
    delta_table: DeltaTable
    long_rows: list
    probes: dict


def exp1_performance_impact(
    manifest: DatasetManifest,
    embedder: ConditionEmbedder,
    cfg: RunConfig = RunConfig(),
    probe_cfg: ProbeConfig = ProbeConfig(),
) -> Exp1Result:
    """Metric deltas between the extreme intensity levels, per effect."""
    probes = train_clean_probes(manifest, embedder, probe_cfg)
    test_rows = manifest.split_rows("test")
    if not test_rows:
        raise InvalidData(f"manifest {manifest.dataset_id} has no test rows")

    long_rows = []
    model_id = embedder.model_id
    clean_metrics = _metrics_for(manifest, probes, _clean_matrix(embedder, test_rows), test_rows)
    for metric, value in clean_metrics.items():
        long_rows.append((manifest.dataset_id, model_id, "clean", 0, metric, value))

    per_level: dict = {}
    for kind in cfg.fx:
        for level in cfg.levels:
            X = _condition_matrix(embedder, test_rows, Condition.fx(kind, level))
            metrics = _metrics_for(manifest, probes, X, test_rows)
            per_level[(kind.value, level)] = metrics
            for metric, value in metrics.items():
                long_rows.append((manifest.dataset_id, model_id, kind.value, level, metric, value))

    table = DeltaTable()
    lo, hi = min(cfg.levels), max(cfg.levels)  # L10 - L1 under the default ladder
    for kind in cfg.fx:
        for metric in per_level[(kind.value, hi)]:
            delta = per_level[(kind.value, hi)][metric] - per_level[(kind.value, lo)][metric]
            table.cells[(manifest.dataset_id, model_id, kind.value, metric)] = delta
    table.compute_markers()
    return Exp1Result(table, long_rows, probes)


def exp2_prediction_shifts(
    manifest: DatasetManifest,
    embedder: ConditionEmbedder,
    cfg: RunConfig = RunConfig(),
    probe_cfg: ProbeConfig = ProbeConfig(),
) -> RadarData:
    """Predicted-label counts per level; level 0 is the clean condition."""
    if manifest.task != "four_class":
        raise InvalidData("prediction-shift radar needs a four_class manifest")
    probes = train_clean_probes(manifest, embedder, probe_cfg)
    probe = probes["label"]

    radar = RadarData(manifest.dataset_id)
    model_id = embedder.model_id
    for kind in cfg.fx:
        if cfg.use_sample_for_shifts:
            ids = sample_tracks(manifest, kind.value, cfg.seed, cfg.per_effect,
                                cfg.per_label, cfg.per_tag)
            rows = [manifest.row_for(t) for t in ids]
        else:
            rows = manifest.split_rows("test")
        if not rows:
            raise InvalidData("no rows to evaluate")
        levels_here: dict = {}
        for level in (0, *cfg.levels):
            condition = Condition.clean() if level == 0 else Condition.fx(kind, level)
            X = _condition_matrix(embedder, rows, condition)
            predictions = probe.predict(X)
            counts = {label: 0 for label in probe.classes_}
            for label in predictions:
                counts[label] += 1
            levels_here[level] = counts
        radar.counts[(model_id, kind.value)] = levels_here
    radar.normalize()
    return radar


_PIPELINE_TASK = {"va_regression": "regression", "four_class": "classification",
                  "gems9_multilabel": "multilabel"}


def _selection_targets(manifest: DatasetManifest) -> list[str]:
    if manifest.task == "va_regression":
        return ["valence", "arousal"]
    if manifest.task == "four_class":
        return ["label"]
    return ["tags"]


def _fit_selection(manifest, embedder, target, pipe_cfg) -> FeatureSelectionPipeline:
    train_rows = manifest.split_rows("train")
    X = _clean_matrix(embedder, train_rows)
    pipeline = FeatureSelectionPipeline(_PIPELINE_TASK[manifest.task], pipe_cfg)
    if manifest.task == "va_regression":
        y = np.array([r.labels[target] for r in train_rows])
    elif manifest.task == "four_class":
        y = np.array([r.labels["label"] for r in train_rows])
    else:
        y = np.array([[r.labels[tag] for tag in manifest.label_columns] for r in train_rows])
    return pipeline.fit(X, y)


@dataclass
class TrajectoryResult:
    target: str
    trajectory_set: TrajectorySet
    points: list = field(default_factory=list)  # (track_id, condition, x, y)
    pipeline: FeatureSelectionPipeline | None = None
    samples: dict = field(default_factory=dict)


def _project_conditions(manifest, embedder, pipeline, proj_cfg, group_conditions) -> dict:
    """Jointly project every (track, condition) across groups; returns key -> xy."""
    keys: list[tuple[str, Condition]] = []
    seen = set()
    for _, pairs in sorted(group_conditions.items()):
        for track_id, condition in pairs:
            key = (track_id, str(condition))
            if key not in seen:
                seen.add(key)
                keys.append((track_id, condition))
    raw = np.stack([embedder.vector(t, c) for t, c in keys])
    selected = pipeline.transform(raw)
    coords = project(selected, proj_cfg)
    return {(t, str(c)): coords[i] for i, (t, c) in enumerate(keys)}


def exp3_trajectories(
    manifest: DatasetManifest,
    embedder: ConditionEmbedder,
    cfg: RunConfig = RunConfig(),
    pipe_cfg: PipelineConfig = PipelineConfig(),
    proj_cfg: ProjectionConfig = ProjectionConfig(),
) -> dict:
    """Per selection target: top-K selection, joint projection, and one
    11-point trajectory (clean, levels 1..10) per sampled (track, fx)."""
    results = {}
    for target in _selection_targets(manifest):
        pipeline = _fit_selection(manifest, embedder, target, pipe_cfg)
        samples = {
            kind.value: sample_tracks(manifest, kind.value, cfg.seed, cfg.per_effect,
                                      cfg.per_label, cfg.per_tag)
            for kind in cfg.fx
        }
        group_conditions = {}
        for kind in cfg.fx:
            pairs = []
            for track_id in samples[kind.value]:
                pairs.append((track_id, Condition.clean()))
                for level in cfg.levels:
                    pairs.append((track_id, Condition.fx(kind, level)))
            group_conditions[kind.value] = pairs
        coords = _project_conditions(manifest, embedder, pipeline, proj_cfg, group_conditions)

        trajectory_set = TrajectorySet("fx")
        for kind in cfg.fx:
            for track_id in samples[kind.value]:
                conditions = [Condition.clean()] + [Condition.fx(kind, lvl) for lvl in cfg.levels]
                points = np.stack([coords[(track_id, str(c))] for c in conditions])
                trajectory_set.add(
                    Trajectory(track_id, kind.value, [str(c) for c in conditions], points)
                )
        points_rows = [(t, c, float(xy[0]), float(xy[1])) for (t, c), xy in coords.items()]
        results[target] = TrajectoryResult(target, trajectory_set, points_rows, pipeline, samples)
    return results


def exp4_scenarios(
    manifest: DatasetManifest,
    embedder: ConditionEmbedder,
    cfg: RunConfig = RunConfig(),
    pipe_cfg: PipelineConfig = PipelineConfig(),
    proj_cfg: ProjectionConfig = ProjectionConfig(),
) -> dict:
    """Chain-prefix trajectories: clean, stage 1, stages 1..2, ..., full chain."""
    results = {}
    for target in _selection_targets(manifest):
        pipeline = _fit_selection(manifest, embedder, target, pipe_cfg)
        samples = {
            name: sample_tracks(manifest, name, cfg.seed, cfg.per_effect,
                                cfg.per_label, cfg.per_tag)
            for name in cfg.scenarios
        }
        group_conditions = {}
        for name in cfg.scenarios:
            n_stages = len(scenario_preset(name))
            pairs = []
            for track_id in samples[name]:
                pairs.append((track_id, Condition.clean()))
                for k in range(1, n_stages + 1):
                    pairs.append((track_id, Condition.chainstage(name, k)))
            group_conditions[name] = pairs
        coords = _project_conditions(manifest, embedder, pipeline, proj_cfg, group_conditions)

        trajectory_set = TrajectorySet("scenario")
        for name in cfg.scenarios:
            n_stages = len(scenario_preset(name))
            for track_id in samples[name]:
                conditions = [Condition.clean()] + [
                    Condition.chainstage(name, k) for k in range(1, n_stages + 1)
                ]
                points = np.stack([coords[(track_id, str(c))] for c in conditions])
                trajectory_set.add(
                    Trajectory(track_id, name, [str(c) for c in conditions], points)
                )
        points_rows = [(t, c, float(xy[0]), float(xy[1])) for (t, c), xy in coords.items()]
        results[target] = TrajectoryResult(target, trajectory_set, points_rows, pipeline, samples)
    return results
