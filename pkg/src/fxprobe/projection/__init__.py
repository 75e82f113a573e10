from .knn import cosine_distances, fuzzy_graph, knn_graph, smooth_calibration
from .layout import fit_curve_params, make_epochs_per_sample, spectral_init
from .project import NeighborEmbedding, PCAProjection, ProjectionConfig, pca_coords, project
from .trajectory import Trajectory, TrajectorySet, trajectory_metrics

__all__ = [
    "NeighborEmbedding", "PCAProjection", "ProjectionConfig", "Trajectory",
    "TrajectorySet", "cosine_distances", "fit_curve_params", "fuzzy_graph",
    "knn_graph", "make_epochs_per_sample", "pca_coords", "project",
    "smooth_calibration", "spectral_init", "trajectory_metrics",
]
