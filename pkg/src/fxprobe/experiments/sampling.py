"""Seeded track sampling for the trajectory experiments.

Sample sizes follow the task: 20 tracks per effect for regression, 5 per
label for single-label classification, 3 per label for multi-label. Each
(dataset, effect) pair draws from its own keyed random stream so results
are independent of evaluation order and worker count.
"""

from __future__ import annotations

import numpy as np

from ..manifest import DatasetManifest
from ..validation import derive_seed


def _draw(pool: list[str], size: int, seed: int) -> list[str]:
    pool = sorted(pool)
    if len(pool) <= size:
        return pool
    rng = np.random.default_rng(seed)
    picked = rng.choice(len(pool), size=size, replace=False)
    return [pool[i] for i in sorted(picked)]


def sample_tracks(
    manifest: DatasetManifest,
    effect_key: str,
    master_seed: int = 42,
    per_effect: int = 20,
    per_label: int = 5,
    per_tag: int = 3,
) -> list[str]:
    """Deterministic sample of track ids for one effect (or scenario) key."""
    if manifest.task == "va_regression":
        pool = [r.track_id for r in manifest.rows]
        seed = derive_seed(master_seed, "sample", manifest.dataset_id, effect_key)
        return _draw(pool, per_effect, seed)
    if manifest.task == "four_class":
        out: list[str] = []
        labels = sorted({r.labels["label"] for r in manifest.rows})
        for label in labels:
            pool = [r.track_id for r in manifest.rows if r.labels["label"] == label]
            seed = derive_seed(master_seed, "sample", manifest.dataset_id, effect_key, label)
            out.extend(_draw(pool, per_label, seed))
        return sorted(set(out))
    out = []
    for tag in manifest.label_columns:
        pool = [r.track_id for r in manifest.rows if r.labels[tag] == 1]
        seed = derive_seed(master_seed, "sample", manifest.dataset_id, effect_key, tag)
        out.extend(_draw(pool, per_tag, seed))
    return sorted(set(out))
