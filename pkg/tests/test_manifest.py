import pytest

from fxprobe.errors import ManifestError
from fxprobe.manifest import (
    DatasetManifest,
    FOUR_CLASS_LABELS,
    GEMS9_TAGS,
    ManifestRow,
    load_manifest,
    save_manifest,
)


def _write(tmp_path, text, name="m.csv"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return path


def test_va_regression_round_trip(tmp_path):
    rows = [
        ManifestRow("a", "audio/a.wav", "train", {"valence": 0.1, "arousal": 0.9}),
        ManifestRow("b", "audio/b.wav", "test", {"valence": 0.5, "arousal": 0.4}),
    ]
    manifest = DatasetManifest("demo", "va_regression", rows, ("valence", "arousal"))
    path = tmp_path / "va.csv"
    save_manifest(manifest, path)
    loaded = load_manifest(path)
    assert loaded.task == "va_regression"
    assert loaded.rows == rows


def test_unknown_task(tmp_path):
    path = _write(tmp_path, "#fxmanifest v1 task=sentiment dataset=x\ntrack_id,audio_path,split,label\n")
    with pytest.raises(ManifestError):
        load_manifest(path)


def test_four_class_label_set_closed(tmp_path):
    path = _write(
        tmp_path,
        "#fxmanifest v1 task=four_class dataset=x\n"
        "track_id,audio_path,split,label\n"
        "a,a.wav,train,Fear\n",
    )
    with pytest.raises(ManifestError) as err:
        load_manifest(path)
    assert err.value.row == 3


def test_four_class_valid_labels(tmp_path):
    body = "\n".join(
        f"t{i},t{i}.wav,train,{label}" for i, label in enumerate(FOUR_CLASS_LABELS)
    )
    path = _write(
        tmp_path,
        f"#fxmanifest v1 task=four_class dataset=x\ntrack_id,audio_path,split,label\n{body}\n",
    )
    manifest = load_manifest(path)
    assert len(manifest.rows) == 4


def test_gems9_needs_nine_tags(tmp_path):
    tags8 = ",".join(GEMS9_TAGS[:8])
    path = _write(
        tmp_path,
        f"#fxmanifest v1 task=gems9_multilabel dataset=x\ntrack_id,audio_path,split,{tags8}\n",
    )
    with pytest.raises(ManifestError) as err:
        load_manifest(path)
    assert err.value.row == 2


def test_gems9_tag_values_binary(tmp_path):
    tags = ",".join(GEMS9_TAGS)
    values = ",".join(["1"] * 8 + ["2"])
    path = _write(
        tmp_path,
        f"#fxmanifest v1 task=gems9_multilabel dataset=x\n"
        f"track_id,audio_path,split,{tags}\na,a.wav,train,{values}\n",
    )
    with pytest.raises(ManifestError):
        load_manifest(path)


def test_duplicate_track_id(tmp_path):
    path = _write(
        tmp_path,
        "#fxmanifest v1 task=va_regression dataset=x\n"
        "track_id,audio_path,split,valence,arousal\n"
        "a,a.wav,train,0.1,0.2\n"
        "a,b.wav,test,0.3,0.4\n",
    )
    with pytest.raises(ManifestError) as err:
        load_manifest(path)
    assert err.value.row == 4


def test_missing_label_column(tmp_path):
    path = _write(
        tmp_path,
        "#fxmanifest v1 task=va_regression dataset=x\ntrack_id,audio_path,split,valence\n",
    )
    with pytest.raises(ManifestError):
        load_manifest(path)


def test_empty_split_assigned_deterministically(tmp_path):
    body = "\n".join(f"t{i},t{i}.wav,,{i/10},{1-i/10}" for i in range(10))
    text = (
        "#fxmanifest v1 task=va_regression dataset=x\n"
        f"track_id,audio_path,split,valence,arousal\n{body}\n"
    )
    path = _write(tmp_path, text)
    first = load_manifest(path, default_split_seed=42)
    second = load_manifest(path, default_split_seed=42)
    assert [r.split for r in first.rows] == [r.split for r in second.rows]
    splits = [r.split for r in first.rows]
    assert splits.count("test") == 2  # 20% of 10
    assert set(splits) == {"train", "test"}


def test_bad_split_value(tmp_path):
    path = _write(
        tmp_path,
        "#fxmanifest v1 task=va_regression dataset=x\n"
        "track_id,audio_path,split,valence,arousal\n"
        "a,a.wav,validation,0.1,0.2\n",
    )
    with pytest.raises(ManifestError):
        load_manifest(path)


def test_non_numeric_regression_label(tmp_path):
    path = _write(
        tmp_path,
        "#fxmanifest v1 task=va_regression dataset=x\n"
        "track_id,audio_path,split,valence,arousal\n"
        "a,a.wav,train,high,0.2\n",
    )
    with pytest.raises(ManifestError):
        load_manifest(path)
