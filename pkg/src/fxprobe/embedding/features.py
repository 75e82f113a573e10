"""Built-in deterministic spectral embedder.

A fixed, weight-free stand-in for foundation-model embeddings: STFT (Hann
1024, hop 256) -> 64-band HTK mel log energies -> per-band mean/std, plus
spectral centroid and flux statistics. Dimension is always 132 and every
value has a closed-form oracle, which is the whole point.
"""

from __future__ import annotations

import numpy as np

from ..audio import AudioBuffer
from ..errors import InputTooShort

WINDOW_SIZE = 1024
HOP_SIZE = 256
N_MEL_BANDS = 64
LOG_FLOOR = 1e-10
DIMENSION = 2 * N_MEL_BANDS + 4

CENTROID_MEAN_INDEX = 2 * N_MEL_BANDS
CENTROID_STD_INDEX = CENTROID_MEAN_INDEX + 1
FLUX_MEAN_INDEX = CENTROID_MEAN_INDEX + 2
FLUX_STD_INDEX = CENTROID_MEAN_INDEX + 3


def hz_to_mel(f):
    """HTK mel scale."""
    return 2595.0 * np.log10(1.0 + np.asarray(f, dtype=np.float64) / 700.0)


def mel_to_hz(m):
    return 700.0 * (10.0 ** (np.asarray(m, dtype=np.float64) / 2595.0) - 1.0)


def mel_filterbank(sample_rate: int, n_fft: int = WINDOW_SIZE, n_bands: int = N_MEL_BANDS) -> np.ndarray:
    """Triangular mel filters over rfft bins, each normalized to unit area."""
    n_bins = n_fft // 2 + 1
    bin_freqs = np.arange(n_bins, dtype=np.float64) * sample_rate / n_fft
    mel_edges = np.linspace(hz_to_mel(0.0), hz_to_mel(sample_rate / 2.0), n_bands + 2)
    hz_edges = mel_to_hz(mel_edges)
    filters = np.zeros((n_bands, n_bins))
    for b in range(n_bands):
        lo, mid, hi = hz_edges[b], hz_edges[b + 1], hz_edges[b + 2]
        rising = (bin_freqs - lo) / max(mid - lo, 1e-12)
        falling = (hi - bin_freqs) / max(hi - mid, 1e-12)
        filters[b] = np.maximum(0.0, np.minimum(rising, falling))
        total = filters[b].sum()
        if total > 0.0:
            filters[b] /= total
    return filters


def _exact_std(x: np.ndarray, axis: int = 0) -> np.ndarray:
    # constant-over-frames values have std exactly 0; drop summation noise
    s = x.std(axis=axis)
    constant = x.max(axis=axis) == x.min(axis=axis)
    return np.where(constant, 0.0, s)


def _stft_magnitudes(mono: np.ndarray, n_fft: int = WINDOW_SIZE, hop: int = HOP_SIZE) -> np.ndarray:
    n = mono.shape[0]
    n_frames = 1 + (n - n_fft) // hop
    idx = np.arange(n_fft)[np.newaxis, :] + hop * np.arange(n_frames)[:, np.newaxis]
    window = 0.5 - 0.5 * np.cos(2.0 * np.pi * np.arange(n_fft) / n_fft)
    return np.abs(np.fft.rfft(mono[idx] * window, axis=1))


def embed_builtin(buf: AudioBuffer) -> np.ndarray:
    """Length-132 feature vector for one buffer. Deterministic by construction."""
    if buf.frames < WINDOW_SIZE:
        raise InputTooShort(
            f"need at least {WINDOW_SIZE} frames for one analysis window, got {buf.frames}"
        )
    mono = buf.mono()
    mags = _stft_magnitudes(mono)
    power = mags**2

    filters = mel_filterbank(buf.sample_rate)
    band_log = np.log(np.maximum(power @ filters.T, LOG_FLOOR))

    n_bins = mags.shape[1]
    bin_freqs = np.arange(n_bins, dtype=np.float64) * buf.sample_rate / WINDOW_SIZE
    mag_sums = mags.sum(axis=1)
    centroid = np.where(mag_sums > 1e-12, (mags @ bin_freqs) / np.maximum(mag_sums, 1e-12), 0.0)

    if mags.shape[0] > 1:
        flux = np.sqrt(((mags[1:] - mags[:-1]) ** 2).sum(axis=1))
    else:
        flux = np.zeros(1)

    features = np.concatenate(
        [
            band_log.mean(axis=0),
            _exact_std(band_log),
            [centroid.mean(), _exact_std(centroid), flux.mean(), _exact_std(flux)],
        ]
    )
    return features


def feature_names() -> list[str]:
    names = [f"band{b:02d}_log_mean" for b in range(N_MEL_BANDS)]
    names += [f"band{b:02d}_log_std" for b in range(N_MEL_BANDS)]
    names += ["centroid_mean", "centroid_std", "flux_mean", "flux_std"]
    return names
