"""Report structures and their tabular text emission.

Everything here writes sorted rows, repr-formatted floats and LF newlines,
so a fixed config yields byte-identical files across runs and worker
counts. The delta table round-trips through its own parser.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from ..errors import ParseError


def _fmt(value) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


@dataclass
class DeltaTable:
    """Level10 - Level1 metric deltas with the two marker conventions.

    ``bold`` marks, per (dataset, model, metric), the effect with the
    largest |delta|; ``underline`` marks, per (dataset, fx, metric), the
    model with the largest |delta|. Ties resolve to the first key in the
    table's canonical ordering.
    """

    cells: dict = field(default_factory=dict)  # (dataset, model, fx, metric) -> float
    bold: set = field(default_factory=set)
    underline: set = field(default_factory=set)

    def compute_markers(self) -> None:
        self.bold.clear()
        self.underline.clear()
        by_dmm: dict = {}
        by_dfm: dict = {}
        for key in sorted(self.cells):
            dataset, model, fx, metric = key
            by_dmm.setdefault((dataset, model, metric), []).append(key)
            by_dfm.setdefault((dataset, fx, metric), []).append(key)
        for keys in by_dmm.values():
            self.bold.add(max(keys, key=lambda k: abs(self.cells[k])))
        for keys in by_dfm.values():
            self.underline.add(max(keys, key=lambda k: abs(self.cells[k])))

    def to_text(self) -> str:
        lines = ["dataset,model,fx,metric,delta,bold,underline"]
        for key in sorted(self.cells):
            dataset, model, fx, metric = key
            lines.append(
                f"{dataset},{model},{fx},{metric},{_fmt(self.cells[key])},"
                f"{int(key in self.bold)},{int(key in self.underline)}"
            )
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "DeltaTable":
        lines = text.splitlines()
        if not lines or lines[0] != "dataset,model,fx,metric,delta,bold,underline":
            raise ParseError(1, "bad delta table header")
        table = cls()
        for line_no, line in enumerate(lines[1:], start=2):
            if not line.strip():
                continue
            parts = line.split(",")
            if len(parts) != 7:
                raise ParseError(line_no, f"expected 7 fields, got {len(parts)}")
            key = tuple(parts[:4])
            table.cells[key] = float(parts[4])
            if parts[5] == "1":
                table.bold.add(key)
            if parts[6] == "1":
                table.underline.add(key)
        return table


@dataclass
class RadarData:
    """Predicted-label counts per (model, fx, level), max-normalized per plot."""

    dataset: str
    counts: dict = field(default_factory=dict)  # (model, fx) -> {level -> {label -> int}}
    normalized: dict = field(default_factory=dict)

    def normalize(self) -> None:
        self.normalized = {}
        for plot_key, levels in self.counts.items():
            top = max((c for level in levels.values() for c in level.values()), default=0)
            self.normalized[plot_key] = {
                level: {
                    label: (count / top if top > 0 else 0.0)
                    for label, count in sorted(labels.items())
                }
                for level, labels in sorted(levels.items())
            }

    def to_text(self) -> str:
        lines = ["dataset,model,fx,level,label,count,normalized"]
        for (model, fx) in sorted(self.counts):
            for level in sorted(self.counts[(model, fx)]):
                for label in sorted(self.counts[(model, fx)][level]):
                    count = self.counts[(model, fx)][level][label]
                    norm = self.normalized[(model, fx)][level][label]
                    lines.append(
                        f"{self.dataset},{model},{fx},{level},{label},{count},{_fmt(norm)}"
                    )
        return "\n".join(lines) + "\n"


def long_metrics_text(rows: list) -> str:
    """rows: (dataset, model, fx, level, metric, value); clean rows use level 0."""
    lines = ["dataset,model,fx,level,metric,value"]
    for row in sorted(rows):
        dataset, model, fx, level, metric, value = row
        lines.append(f"{dataset},{model},{fx},{level},{metric},{_fmt(value)}")
    return "\n".join(lines) + "\n"


def points_text(points: list) -> str:
    """points: (track_id, condition, x, y)."""
    lines = ["track_id,condition,x,y"]
    for track_id, condition, x, y in sorted(points):
        lines.append(f"{track_id},{condition},{_fmt(float(x))},{_fmt(float(y))}")
    return "\n".join(lines) + "\n"


def trajectory_metrics_text(trajectory_set) -> str:
    lines = ["key,track_id,length,net_displacement,straightness,point_variance"]
    entries = sorted(
        (t.key, t.track_id, t.metrics) for t in trajectory_set.trajectories
    )
    for key, track_id, metrics in entries:
        lines.append(
            f"{key},{track_id},{_fmt(metrics['length'])},{_fmt(metrics['net_displacement'])},"
            f"{_fmt(metrics['straightness'])},{_fmt(metrics['point_variance'])}"
        )
    return "\n".join(lines) + "\n"


def trajectory_summary_text(trajectory_set) -> str:
    lines = ["key,mean_length,mean_net_displacement,mean_straightness,mean_point_variance"]
    for key, stats in sorted(trajectory_set.summary().items()):
        lines.append(
            f"{key},{_fmt(stats['length'])},{_fmt(stats['net_displacement'])},"
            f"{_fmt(stats['straightness'])},{_fmt(stats['point_variance'])}"
        )
    return "\n".join(lines) + "\n"


def write_text(path: Path, text: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
