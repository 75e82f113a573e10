from ..manifest import DatasetManifest, load_manifest, save_manifest
from .config import build_configs, load_config_file, resolve_outdir
from .reports import (
    DeltaTable,
    RadarData,
    long_metrics_text,
    points_text,
    trajectory_metrics_text,
    trajectory_summary_text,
    write_text,
)
from .runner import (
    Exp1Result,
    RunConfig,
    TrajectoryResult,
    exp1_performance_impact,
    exp2_prediction_shifts,
    exp3_trajectories,
    exp4_scenarios,
    train_clean_probes,
)
from .sampling import sample_tracks

__all__ = [
    "DatasetManifest", "DeltaTable", "Exp1Result", "RadarData", "RunConfig",
    "TrajectoryResult", "build_configs", "exp1_performance_impact",
    "exp2_prediction_shifts", "exp3_trajectories", "exp4_scenarios",
    "load_config_file", "load_manifest", "long_metrics_text", "points_text",
    "resolve_outdir", "sample_tracks", "save_manifest",
    "trajectory_metrics_text", "trajectory_summary_text",
    "train_clean_probes", "write_text",
]
