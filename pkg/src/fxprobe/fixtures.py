"""Synthetic audio fixtures with labels derived from builtin features.

Tracks are two-partial sine mixtures with a small seeded noise floor.
Valence is an affine function of the clean embedding's spectral-centroid
mean; arousal is affine in the mean band log-energy, so clean-trained
probes have signal to learn and FX-induced drift is measurable.

Everything is deterministic per seed, including the WAV bytes (float32
encoding round-trips exactly).
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .audio import AudioBuffer, WavSpec, write_wav
from .embedding import embed_builtin
from .embedding.features import CENTROID_MEAN_INDEX, N_MEL_BANDS
from .manifest import DatasetManifest, FOUR_CLASS_LABELS, GEMS9_TAGS, ManifestRow, save_manifest

_GEMS9_FEATURES = (4, 11, 18, 25, 32, 39, 46, 53, 60)  # spread mel bands, one per tag


def _synth_track(rng: np.random.Generator, sample_rate: int, duration: float) -> AudioBuffer:
    n = int(round(duration * sample_rate))
    t = np.arange(n, dtype=np.float64) / sample_rate
    f0 = float(np.exp(rng.uniform(np.log(110.0), np.log(1200.0))))
    harmonic = int(rng.integers(2, 5))
    partial_amp = float(rng.uniform(0.05, 0.6))
    gain = float(rng.uniform(0.25, 0.85))
    # noise scales with gain so noise-to-signal (and the centroid) stays
    # independent of loudness
    noise = rng.normal(0.0, gain * 0.008, size=n)
    wave = np.sin(2.0 * np.pi * f0 * t) + partial_amp * np.sin(2.0 * np.pi * harmonic * f0 * t)
    wave = gain * wave / (1.0 + partial_amp) + noise
    return AudioBuffer(sample_rate, wave.astype(np.float32))


def _affine_unit(values: np.ndarray) -> np.ndarray:
    lo, hi = values.min(), values.max()
    if hi == lo:
        return np.zeros_like(values)
    return (values - lo) / (hi - lo)


def _splits(n: int, seed: int, test_fraction: float = 0.2) -> list[str]:
    rng = np.random.default_rng(seed + 1)
    order = rng.permutation(n)
    n_test = max(1, int(round(n * test_fraction)))
    test_idx = set(order[:n_test].tolist())
    return ["test" if i in test_idx else "train" for i in range(n)]


def make_synthetic_fixture(
    root,
    n_tracks: int = 50,
    seed: int = 42,
    sample_rate: int = 32000,
    duration: float = 1.5,
) -> dict:
    """Write WAVs plus the three task manifests; returns their paths."""
    root = Path(root)
    audio_dir = root / "audio"
    audio_dir.mkdir(parents=True, exist_ok=True)
    rng = np.random.default_rng(seed)

    track_ids = [f"t{i:03d}" for i in range(n_tracks)]
    embeddings = []
    for track_id in track_ids:
        buf = _synth_track(rng, sample_rate, duration)
        write_wav(buf, WavSpec("float32", sample_rate, 1), audio_dir / f"{track_id}.wav")
        embeddings.append(embed_builtin(buf))
    E = np.stack(embeddings)

    valence = _affine_unit(E[:, CENTROID_MEAN_INDEX])
    arousal = _affine_unit(E[:, :N_MEL_BANDS].mean(axis=1))
    splits = _splits(n_tracks, seed)

    def rows(labels_fn):
        return [
            ManifestRow(track_ids[i], f"audio/{track_ids[i]}.wav", splits[i], labels_fn(i))
            for i in range(n_tracks)
        ]

    regression = DatasetManifest(
        "synth_va", "va_regression",
        rows(lambda i: {"valence": float(valence[i]), "arousal": float(arousal[i])}),
        ("valence", "arousal"),
    )

    v_med, a_med = np.median(valence), np.median(arousal)

    def quadrant(i: int) -> dict:
        hi_v, hi_a = valence[i] >= v_med, arousal[i] >= a_med
        if hi_v and hi_a:
            label = "Excitement"
        elif not hi_v and hi_a:
            label = "Anger"
        elif not hi_v and not hi_a:
            label = "Sadness"
        else:
            label = "Calmness"
        return {"label": label}

    four_class = DatasetManifest("synth_4c", "four_class", rows(quadrant), ("label",))

    tag_medians = {tag: np.median(E[:, feat]) for tag, feat in zip(GEMS9_TAGS, _GEMS9_FEATURES)}

    def tags(i: int) -> dict:
        return {
            tag: int(E[i, feat] >= tag_medians[tag])
            for tag, feat in zip(GEMS9_TAGS, _GEMS9_FEATURES)
        }

    gems9 = DatasetManifest("synth_gems9", "gems9_multilabel", rows(tags), GEMS9_TAGS)

    paths = {}
    for name, manifest in (("regression", regression), ("four_class", four_class), ("gems9", gems9)):
        path = root / f"{name}.csv"
        save_manifest(manifest, path)
        paths[name] = path
    paths["audio_dir"] = audio_dir
    return paths


def make_two_class_energy_fixture(
    root,
    n_tracks: int = 24,
    seed: int = 7,
    sample_rate: int = 32000,
    duration: float = 1.0,
) -> Path:
    """four_class manifest using only Anger/Calmness, split by signal energy.

    The class boundary is a pure loudness threshold, so saturation-driven
    loudness growth shifts predictions toward the high-energy class.
    """
    root = Path(root)
    audio_dir = root / "audio"
    audio_dir.mkdir(parents=True, exist_ok=True)
    rng = np.random.default_rng(seed)

    rows = []
    n = int(round(duration * sample_rate))
    t = np.arange(n, dtype=np.float64) / sample_rate
    for i in range(n_tracks):
        track_id = f"e{i:03d}"
        quiet = i % 2 == 0
        gain = float(rng.uniform(0.05, 0.1)) if quiet else float(rng.uniform(0.6, 0.8))
        f0 = float(np.exp(rng.uniform(np.log(150.0), np.log(900.0))))
        # proportional noise keeps every non-loudness feature class-neutral
        wave = gain * np.sin(2.0 * np.pi * f0 * t) + rng.normal(0.0, gain * 0.01, size=n)
        buf = AudioBuffer(sample_rate, wave.astype(np.float32))
        write_wav(buf, WavSpec("float32", sample_rate, 1), audio_dir / f"{track_id}.wav")
        label = "Calmness" if quiet else "Anger"
        split = "train" if i < int(n_tracks * 0.5) else "test"
        rows.append(ManifestRow(track_id, f"audio/{track_id}.wav", split, {"label": label}))

    manifest = DatasetManifest("synth_energy", "four_class", rows, ("label",))
    path = root / "two_class.csv"
    save_manifest(manifest, path)
    return path


def make_sine_fixture(
    root,
    n_tracks: int = 12,
    seed: int = 3,
    sample_rate: int = 32000,
    duration: float = 1.0,
) -> Path:
    """Pure-sine regression fixture for trajectory-direction checks."""
    root = Path(root)
    audio_dir = root / "audio"
    audio_dir.mkdir(parents=True, exist_ok=True)
    rng = np.random.default_rng(seed)

    n = int(round(duration * sample_rate))
    t = np.arange(n, dtype=np.float64) / sample_rate
    freqs = np.exp(rng.uniform(np.log(180.0), np.log(1400.0), size=n_tracks))
    gains = rng.uniform(0.3, 0.8, size=n_tracks)
    embeddings = []
    track_ids = [f"s{i:03d}" for i in range(n_tracks)]
    for i, track_id in enumerate(track_ids):
        wave = gains[i] * np.sin(2.0 * np.pi * freqs[i] * t)
        buf = AudioBuffer(sample_rate, wave.astype(np.float32))
        write_wav(buf, WavSpec("float32", sample_rate, 1), audio_dir / f"{track_id}.wav")
        embeddings.append(embed_builtin(buf))
    E = np.stack(embeddings)
    valence = _affine_unit(E[:, CENTROID_MEAN_INDEX])
    arousal = _affine_unit(E[:, :N_MEL_BANDS].mean(axis=1))
    splits = _splits(n_tracks, seed)
    rows = [
        ManifestRow(
            track_ids[i], f"audio/{track_ids[i]}.wav", splits[i],
            {"valence": float(valence[i]), "arousal": float(arousal[i])},
        )
        for i in range(n_tracks)
    ]
    manifest = DatasetManifest("synth_sine", "va_regression", rows, ("valence", "arousal"))
    path = root / "sine.csv"
    save_manifest(manifest, path)
    return path
