"""YAML run configuration and assembly of the per-module config objects."""

from __future__ import annotations

from pathlib import Path

import yaml

from ..effects import FxKind
from ..errors import InvalidData
from ..pipeline import PipelineConfig
from ..probes import ProbeConfig
from ..projection import ProjectionConfig
from .runner import DEFAULT_LEVELS, RunConfig


def load_config_file(path) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        data = yaml.safe_load(fh) or {}
    if not isinstance(data, dict):
        raise InvalidData(f"config {path} must be a mapping at top level")
    return data


def build_configs(data: dict, seed: int | None = None, jobs: int | None = None):
    """Merge a config mapping with CLI overrides into the four config objects."""
    data = dict(data or {})
    run_seed = seed if seed is not None else int(data.get("seed", 42))
    run_jobs = jobs if jobs is not None else int(data.get("jobs", 1))

    fx_names = data.get("fx") or [k.value for k in FxKind]
    fx = tuple(FxKind.parse(str(name)) for name in fx_names)
    levels = tuple(int(v) for v in data.get("levels", DEFAULT_LEVELS))
    scenarios = tuple(data.get("scenarios", ("pink_floyd", "ratm", "u2")))
    sampling = data.get("sampling", {}) or {}

    run_cfg = RunConfig(
        seed=run_seed,
        jobs=run_jobs,
        fx=fx,
        levels=levels,
        scenarios=scenarios,
        per_effect=int(sampling.get("per_effect", 20)),
        per_label=int(sampling.get("per_label", 5)),
        per_tag=int(sampling.get("per_tag", 3)),
        use_sample_for_shifts=bool(data.get("use_sample_for_shifts", False)),
    )

    probe = data.get("probe", {}) or {}
    probe_cfg = ProbeConfig(
        n_trees=int(probe.get("n_trees", 50)),
        max_depth=int(probe.get("max_depth", 3)),
        learning_rate=float(probe.get("learning_rate", 0.1)),
        min_samples_leaf=int(probe.get("min_samples_leaf", 2)),
        seed=int(probe.get("seed", run_seed)),
    )

    pipe = data.get("pipeline", {}) or {}
    pipe_cfg = PipelineConfig(
        variance_eps=float(pipe.get("variance_eps", 1e-6)),
        corr_threshold=float(pipe.get("corr_threshold", 0.95)),
        l1_ratios=tuple(pipe.get("l1_ratios", (0.5, 0.8))),
        n_alphas=int(pipe.get("n_alphas", 50)),
        cv_folds=int(pipe.get("cv_folds", 5)),
        max_iter=int(pipe.get("max_iter", 60000)),
        tol=float(pipe.get("tol", 2e-3)),
        clf_l1_ratio=float(pipe.get("clf_l1_ratio", 0.5)),
        clf_C=float(pipe.get("clf_C", 0.5)),
        clf_max_iter=int(pipe.get("clf_max_iter", 6000)),
        top_k=int(pipe.get("top_k", 25)),
        seed=int(pipe.get("seed", run_seed)),
    )

    proj = data.get("projection", {}) or {}
    proj_cfg = ProjectionConfig(
        method=str(proj.get("method", "neighbor_embed")),
        n_neighbors=int(proj.get("n_neighbors", 30)),
        min_dist=float(proj.get("min_dist", 0.5)),
        n_epochs=int(proj.get("n_epochs", 200)),
        seed=int(proj.get("seed", run_seed)),
        negative_sample_rate=int(proj.get("negative_sample_rate", 5)),
    )
    return run_cfg, probe_cfg, pipe_cfg, proj_cfg


def resolve_outdir(data: dict, cli_value) -> Path:
    if cli_value:
        return Path(cli_value)
    return Path(data.get("outdir", "fxprobe-out"))
