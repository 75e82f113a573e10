"""Dataset manifests: comma-separated tables with a task-naming header.

Layout::

    #fxmanifest v1 task=<task> dataset=<id>
    track_id,audio_path,split,<label columns>
    t000,audio/t000.wav,train,...

Label columns per task: ``va_regression`` -> valence,arousal (reals);
``four_class`` -> label (one of the four categorical emotions);
``gems9_multilabel`` -> exactly nine 0/1 tag columns. A missing or empty
split column is filled deterministically with an 80/20 seeded shuffle.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import ManifestError

TASKS = ("va_regression", "four_class", "gems9_multilabel")

FOUR_CLASS_LABELS = ("Excitement", "Anger", "Sadness", "Calmness")

GEMS9_TAGS = (
    "wonder",
    "transcendence",
    "tenderness",
    "nostalgia",
    "peacefulness",
    "power",
    "joyful_activation",
    "tension",
    "sadness",
)

_FIXED_COLUMNS = ("track_id", "audio_path", "split")
_DEFAULT_TEST_FRACTION = 0.2


@dataclass(frozen=True)
class ManifestRow:
    track_id: str
    audio_path: str
    split: str
    labels: dict


@dataclass
class DatasetManifest:
    dataset_id: str
    task: str
    rows: list[ManifestRow]
    label_columns: tuple = field(default_factory=tuple)

    @property
    def track_ids(self) -> list[str]:
        return [r.track_id for r in self.rows]

    def split_rows(self, split: str) -> list[ManifestRow]:
        return [r for r in self.rows if r.split == split]

    def row_for(self, track_id: str) -> ManifestRow:
        for r in self.rows:
            if r.track_id == track_id:
                return r
        raise KeyError(track_id)

    def regression_targets(self) -> tuple[str, ...]:
        return ("valence", "arousal") if self.task == "va_regression" else ()

    def audio_path_for(self, track_id: str, root: Path | None = None) -> Path:
        p = Path(self.row_for(track_id).audio_path)
        return (root / p) if (root is not None and not p.is_absolute()) else p


def _parse_header(line: str) -> dict:
    if not line.startswith("#fxmanifest v1"):
        raise ManifestError(1, "missing '#fxmanifest v1' header")
    return dict(tok.split("=", 1) for tok in line.split()[2:] if "=" in tok)


def load_manifest(path, default_split_seed: int = 42) -> DatasetManifest:
    path = Path(path)
    with open(path, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise ManifestError(1, "empty manifest")
    meta = _parse_header(lines[0])
    task = meta.get("task", "")
    if task not in TASKS:
        raise ManifestError(1, f"unknown task {task!r}; expected one of {TASKS}")
    dataset_id = meta.get("dataset", path.stem)

    reader = csv.reader(lines[1:])
    try:
        columns = next(reader)
    except StopIteration:
        raise ManifestError(2, "missing column header") from None
    if tuple(columns[:3]) != _FIXED_COLUMNS:
        raise ManifestError(2, f"columns must start with {','.join(_FIXED_COLUMNS)}")
    label_columns = tuple(columns[3:])

    if task == "va_regression":
        if label_columns != ("valence", "arousal"):
            raise ManifestError(2, "va_regression needs exactly valence,arousal columns")
    elif task == "four_class":
        if label_columns != ("label",):
            raise ManifestError(2, "four_class needs exactly one 'label' column")
    else:
        if len(label_columns) != 9:
            raise ManifestError(2, f"gems9_multilabel needs exactly 9 tag columns, got {len(label_columns)}")

    rows: list[ManifestRow] = []
    seen: set[str] = set()
    for file_row, cells in enumerate(reader, start=3):
        if not cells or (len(cells) == 1 and not cells[0].strip()):
            continue
        if len(cells) != len(columns):
            raise ManifestError(file_row, f"expected {len(columns)} cells, got {len(cells)}")
        track_id, audio_path, split = cells[0].strip(), cells[1].strip(), cells[2].strip()
        if not track_id:
            raise ManifestError(file_row, "empty track_id")
        if track_id in seen:
            raise ManifestError(file_row, f"duplicate track_id {track_id!r}")
        seen.add(track_id)
        if split not in ("train", "test", ""):
            raise ManifestError(file_row, f"split must be train/test/empty, got {split!r}")

        raw = dict(zip(label_columns, (c.strip() for c in cells[3:])))
        if task == "va_regression":
            try:
                labels = {k: float(raw[k]) for k in ("valence", "arousal")}
            except ValueError:
                raise ManifestError(file_row, "valence/arousal must be numeric") from None
        elif task == "four_class":
            label = raw["label"]
            if label not in FOUR_CLASS_LABELS:
                raise ManifestError(file_row, f"label {label!r} not in {FOUR_CLASS_LABELS}")
            labels = {"label": label}
        else:
            labels = {}
            for tag, value in raw.items():
                if value not in ("0", "1"):
                    raise ManifestError(file_row, f"tag {tag!r} must be 0 or 1, got {value!r}")
                labels[tag] = int(value)
        rows.append(ManifestRow(track_id, audio_path, split, labels))

    rows = _assign_missing_splits(rows, default_split_seed)
    return DatasetManifest(dataset_id, task, rows, label_columns)


def _assign_missing_splits(rows: list[ManifestRow], seed: int) -> list[ManifestRow]:
    missing = [i for i, r in enumerate(rows) if r.split == ""]
    if not missing:
        return rows
    rng = np.random.default_rng(seed)
    order = rng.permutation(len(missing))
    n_test = max(1, int(round(len(missing) * _DEFAULT_TEST_FRACTION)))
    test_positions = {missing[order[i]] for i in range(n_test)}
    out = []
    for i, r in enumerate(rows):
        if r.split:
            out.append(r)
        else:
            out.append(ManifestRow(r.track_id, r.audio_path, "test" if i in test_positions else "train", r.labels))
    return out


def save_manifest(manifest: DatasetManifest, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"#fxmanifest v1 task={manifest.task} dataset={manifest.dataset_id}\n")
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(list(_FIXED_COLUMNS) + list(manifest.label_columns))
        for r in manifest.rows:
            labels = [r.labels[c] for c in manifest.label_columns]
            formatted = [repr(v) if isinstance(v, float) else str(v) for v in labels]
            writer.writerow([r.track_id, r.audio_path, r.split] + formatted)
