"""Waveform container and test-signal synthesis.

Samples are stored as float32 (channels, frames); DSP code promotes to
float64 internally and casts back on output. Buffers are immutable by
convention: every operation returns a new buffer.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import InvalidData

_PROCESSABLE_CHANNELS = (1, 2)


@dataclass(frozen=True)
class AudioBuffer:
    """A sampled waveform with rate and channel metadata.

    Parameters
    ----------
    sample_rate : int
        Positive sampling rate in Hz.
    samples : ndarray of shape (channels, frames), float32
        Per-channel amplitude sequences, nominally in [-1, 1]. Excursions
        are permitted; encoding clamps on write.
    """

    sample_rate: int
    samples: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.sample_rate <= 0:
            raise InvalidData(f"sample_rate must be positive, got {self.sample_rate}")
        arr = np.asarray(self.samples, dtype=np.float32)
        if arr.ndim == 1:
            arr = arr[np.newaxis, :]
        if arr.ndim != 2:
            raise InvalidData(f"samples must be (channels, frames), got shape {arr.shape}")
        if arr.shape[0] not in _PROCESSABLE_CHANNELS:
            raise InvalidData(f"channels must be 1 or 2, got {arr.shape[0]}")
        if arr.size and not np.all(np.isfinite(arr)):
            raise InvalidData("samples contain NaN or Inf")
        arr = np.ascontiguousarray(arr)
        arr.setflags(write=False)
        object.__setattr__(self, "samples", arr)

    @property
    def channels(self) -> int:
        return self.samples.shape[0]

    @property
    def frames(self) -> int:
        return self.samples.shape[1]

    @property
    def duration(self) -> float:
        return self.frames / self.sample_rate

    def mono(self) -> np.ndarray:
        """Mean-of-channels mono mix as float64."""
        return self.samples.astype(np.float64).mean(axis=0)

    def with_samples(self, samples: np.ndarray) -> "AudioBuffer":
        return AudioBuffer(self.sample_rate, samples)


def synth_signal(
    kind: str,
    duration: float,
    sample_rate: int,
    *,
    freq: float = 440.0,
    seed: int = 0,
    amplitude: float = 1.0,
) -> AudioBuffer:
    """Generate a deterministic mono test signal.

    ``kind`` is one of ``sine`` (uses ``freq``), ``impulse``, ``silence``,
    ``white_noise`` (uses ``seed``). Noise is uniform in [-1, 1] and fully
    determined by the seed.
    """
    if duration <= 0:
        raise InvalidData(f"duration must be positive, got {duration}")
    n = int(round(duration * sample_rate))
    if kind == "silence":
        data = np.zeros(n, dtype=np.float32)
    elif kind == "impulse":
        data = np.zeros(n, dtype=np.float32)
        data[0] = amplitude
    elif kind == "sine":
        t = np.arange(n, dtype=np.float64) / sample_rate
        data = (amplitude * np.sin(2.0 * np.pi * freq * t)).astype(np.float32)
    elif kind == "white_noise":
        rng = np.random.default_rng(seed)
        data = (amplitude * rng.uniform(-1.0, 1.0, size=n)).astype(np.float32)
    else:
        raise InvalidData(f"unknown signal kind {kind!r}")
    return AudioBuffer(sample_rate, data)
