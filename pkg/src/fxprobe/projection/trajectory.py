"""Ordered point paths in projected space and their shape metrics."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import InvalidData


def trajectory_metrics(points) -> dict:
    """length, net displacement, straightness (net/length, 1 when degenerate),
    and mean squared distance to the centroid."""
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise InvalidData(f"points must be (n, 2), got shape {pts.shape}")
    if pts.shape[0] == 0:
        raise InvalidData("empty trajectory")
    segments = np.sqrt(((pts[1:] - pts[:-1]) ** 2).sum(axis=1))
    length = float(segments.sum())
    net = float(np.sqrt(((pts[-1] - pts[0]) ** 2).sum()))
    straightness = 1.0 if length == 0.0 else net / length
    centroid = pts.mean(axis=0)
    variance = float(((pts - centroid) ** 2).sum(axis=1).mean())
    return {
        "length": length,
        "net_displacement": net,
        "straightness": straightness,
        "point_variance": variance,
    }


@dataclass
class Trajectory:
    track_id: str
    key: str  # fx kind or scenario name
    conditions: list
    points: np.ndarray

    def __post_init__(self):
        self.points = np.asarray(self.points, dtype=np.float64)
        if self.points.shape[0] != len(self.conditions):
            raise InvalidData("one point per condition required")
        self.metrics = trajectory_metrics(self.points)


@dataclass
class TrajectorySet:
    group_kind: str  # "fx" or "scenario"
    trajectories: list = field(default_factory=list)

    def add(self, trajectory: Trajectory) -> None:
        self.trajectories.append(trajectory)

    def for_key(self, key: str) -> list:
        return [t for t in self.trajectories if t.key == key]

    def keys(self) -> list:
        return sorted({t.key for t in self.trajectories})

    def summary(self) -> dict:
        """Per-key means of each trajectory metric."""
        out = {}
        for key in self.keys():
            group = self.for_key(key)
            out[key] = {
                metric: float(np.mean([t.metrics[metric] for t in group]))
                for metric in ("length", "net_displacement", "straightness", "point_variance")
            }
        return out
