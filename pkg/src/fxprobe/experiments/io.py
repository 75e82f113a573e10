"""Filesystem layout for experiment outputs."""

from __future__ import annotations

from pathlib import Path

from ..probes import save_probe
from .reports import (
    long_metrics_text,
    points_text,
    trajectory_metrics_text,
    trajectory_summary_text,
    write_text,
)


def write_exp1_outputs(result, outdir) -> list[Path]:
    outdir = Path(outdir)
    written = []
    path = outdir / "delta_table.csv"
    write_text(path, result.delta_table.to_text())
    written.append(path)
    path = outdir / "metrics_long.csv"
    write_text(path, long_metrics_text(result.long_rows))
    written.append(path)
    for target, probe in sorted(result.probes.items()):
        path = outdir / f"probe_{target}.txt"
        path.parent.mkdir(parents=True, exist_ok=True)
        save_probe(probe, path)
        written.append(path)
    return written


def write_exp2_outputs(radar, outdir) -> list[Path]:
    path = Path(outdir) / "radar.csv"
    write_text(path, radar.to_text())
    return [path]


def write_trajectory_outputs(results: dict, outdir) -> list[Path]:
    outdir = Path(outdir)
    written = []
    for target, result in sorted(results.items()):
        for name, text in (
            (f"points_{target}.csv", points_text(result.points)),
            (f"trajectory_metrics_{target}.csv", trajectory_metrics_text(result.trajectory_set)),
            (f"trajectory_summary_{target}.csv", trajectory_summary_text(result.trajectory_set)),
            (f"provenance_{target}.txt", result.pipeline.provenance_text()),
        ):
            path = outdir / name
            write_text(path, text)
            written.append(path)
    return written
