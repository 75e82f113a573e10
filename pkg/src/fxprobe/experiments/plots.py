"""Optional static SVG plots rendered from the emitted tables.

matplotlib is imported lazily so the core toolkit stays plot-free; figures
carry no date metadata, keeping outputs reproducible.
"""

from __future__ import annotations

import math
from pathlib import Path


def _plt():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def _save(fig, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, format="svg", metadata={"Date": None})


def plot_radar(radar, outdir: Path) -> list[Path]:
    plt = _plt()
    written = []
    for (model, fx), levels in sorted(radar.normalized.items()):
        labels = sorted(next(iter(levels.values())).keys())
        angles = [2.0 * math.pi * i / len(labels) for i in range(len(labels))]
        fig = plt.figure(figsize=(4, 4))
        ax = fig.add_subplot(111, polar=True)
        for level in sorted(levels):
            values = [levels[level][label] for label in labels]
            ax.plot(angles + angles[:1], values + values[:1], label=f"L{level}", linewidth=1.0)
        ax.set_xticks(angles)
        ax.set_xticklabels(labels, fontsize=7)
        ax.set_title(f"{model} / {fx}", fontsize=9)
        ax.legend(fontsize=5, loc="lower right")
        path = Path(outdir) / f"radar_{model}_{fx}.svg"
        _save(fig, path)
        plt.close(fig)
        written.append(path)
    return written


def plot_trajectories(result, outdir: Path, prefix: str) -> list[Path]:
    plt = _plt()
    written = []
    trajectory_set = result.trajectory_set
    for key in trajectory_set.keys():
        fig, ax = plt.subplots(figsize=(5, 4))
        for t in trajectory_set.for_key(key):
            ax.plot(t.points[:, 0], t.points[:, 1], marker=".", markersize=3, linewidth=0.8, alpha=0.7)
            ax.plot(t.points[0, 0], t.points[0, 1], marker="o", markersize=5, color="black")
        ax.set_title(f"{prefix} {result.target} / {key}", fontsize=9)
        path = Path(outdir) / f"{prefix}_{result.target}_{key}.svg"
        _save(fig, path)
        plt.close(fig)
        written.append(path)
    return written


def plot_delta_table(table, outdir: Path) -> list[Path]:
    plt = _plt()
    datasets_models = sorted({(d, m) for (d, m, _, _) in table.cells})
    written = []
    for dataset, model in datasets_models:
        fxs = sorted({f for (d, m, f, _) in table.cells if (d, m) == (dataset, model)})
        metrics = sorted({k for (d, m, _, k) in table.cells if (d, m) == (dataset, model)})
        grid = [[table.cells[(dataset, model, f, k)] for k in metrics] for f in fxs]
        fig, ax = plt.subplots(figsize=(1.2 + 0.8 * len(metrics), 1.0 + 0.4 * len(fxs)))
        im = ax.imshow(grid, cmap="RdBu_r", aspect="auto")
        ax.set_xticks(range(len(metrics)))
        ax.set_xticklabels(metrics, rotation=45, ha="right", fontsize=6)
        ax.set_yticks(range(len(fxs)))
        ax.set_yticklabels(fxs, fontsize=7)
        fig.colorbar(im, ax=ax, shrink=0.8)
        ax.set_title(f"delta L_hi - L_lo: {dataset}/{model}", fontsize=8)
        fig.tight_layout()
        path = Path(outdir) / f"delta_{dataset}_{model}.svg"
        _save(fig, path)
        plt.close(fig)
        written.append(path)
    return written
