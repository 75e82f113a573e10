"""Application of effect settings to audio buffers.

Channels are processed independently with identical settings; output length
always equals input length (tails truncated) so per-track comparisons stay
frame-aligned. Intermediates are float64, outputs float32.
"""

from __future__ import annotations

import numpy as np
from scipy.signal import lfilter

from ..audio import AudioBuffer
from ..errors import InvalidCutoff, InvalidData
from . import kernels
from .settings import Chorus, Delay, Distortion, Eq, FxChain, FxKind, FxSettings, Phaser, Reverb

# Classic Freeverb tunings, defined at 44.1 kHz and scaled to the buffer rate.
_COMB_TUNINGS_44100 = (1116, 1188, 1277, 1356, 1422, 1491, 1557, 1617)
_ALLPASS_TUNINGS_44100 = (556, 441, 341, 225)
_ALLPASS_FEEDBACK = 0.5
_FIXED_GAIN = 0.015


def _per_channel(buf: AudioBuffer, fn) -> AudioBuffer:
    processed = np.stack([fn(ch.astype(np.float64)) for ch in buf.samples])
    return buf.with_samples(processed.astype(np.float32))


# largest float32 strictly below 1; tanh < 1 mathematically, but the cast
# can round up to 1.0 at extreme drive
_TANH_CEIL = float(np.nextafter(np.float32(1.0), np.float32(0.0)))


def apply_distortion(buf: AudioBuffer, s: Distortion) -> AudioBuffer:
    gain = 10.0 ** (s.drive_db / 20.0)
    return _per_channel(buf, lambda x: np.clip(np.tanh(x * gain), -_TANH_CEIL, _TANH_CEIL))


def apply_delay(buf: AudioBuffer, s: Delay) -> AudioBuffer:
    d = int(round(s.delay_seconds * buf.sample_rate))
    if d < 1:
        raise InvalidData(f"delay of {s.delay_seconds}s is under one frame at {buf.sample_rate} Hz")

    def run(x: np.ndarray) -> np.ndarray:
        n = x.shape[0]
        w = np.zeros_like(x)
        if d < n:
            w[d:] = x[:-d]
            # w[n] = x[n-d] + fb*w[n-d]; strided blocks keep the recurrence exact
            for start in range(d, n, d):
                stop = min(start + d, n)
                w[start:stop] += s.feedback * w[start - d : start - d + (stop - start)]
        return (1.0 - s.mix) * x + s.mix * w

    return _per_channel(buf, run)


def _scaled_tunings(sample_rate: int) -> tuple[np.ndarray, np.ndarray]:
    scale = sample_rate / 44100.0
    combs = np.array([max(1, int(round(t * scale))) for t in _COMB_TUNINGS_44100], dtype=np.int64)
    allpasses = np.array([max(1, int(round(t * scale))) for t in _ALLPASS_TUNINGS_44100], dtype=np.int64)
    return combs, allpasses


def apply_reverb(buf: AudioBuffer, s: Reverb) -> AudioBuffer:
    combs, allpasses = _scaled_tunings(buf.sample_rate)
    comb_feedback = 0.7 + 0.28 * s.room_size
    damp = s.damping * 0.4

    def run(x: np.ndarray) -> np.ndarray:
        wet = kernels.freeverb_wet(x, combs, comb_feedback, damp, allpasses,
                                   _ALLPASS_FEEDBACK, _FIXED_GAIN)
        return s.dry * x + s.wet * wet

    return _per_channel(buf, run)


def _first_order_coeffs(cutoff_hz: float, sample_rate: int, highpass: bool):
    # Bilinear transform of the analog one-pole prototype.
    k = np.tan(np.pi * cutoff_hz / sample_rate)
    a1 = (k - 1.0) / (k + 1.0)
    if highpass:
        b = np.array([1.0 / (k + 1.0), -1.0 / (k + 1.0)])
    else:
        b = np.array([k / (k + 1.0), k / (k + 1.0)])
    a = np.array([1.0, a1])
    return b, a


def apply_eq(buf: AudioBuffer, s: Eq) -> AudioBuffer:
    nyquist = buf.sample_rate / 2.0
    if not (0.0 < s.low_cutoff < s.high_cutoff < nyquist):
        raise InvalidCutoff(
            f"cutoffs ({s.low_cutoff}, {s.high_cutoff}) invalid for rate {buf.sample_rate}"
        )
    b_hp, a_hp = _first_order_coeffs(s.low_cutoff, buf.sample_rate, highpass=True)
    b_lp, a_lp = _first_order_coeffs(s.high_cutoff, buf.sample_rate, highpass=False)

    def run(x: np.ndarray) -> np.ndarray:
        return lfilter(b_lp, a_lp, lfilter(b_hp, a_hp, x))

    return _per_channel(buf, run)


def apply_chorus(buf: AudioBuffer, s: Chorus) -> AudioBuffer:
    centre_samples = s.centre_delay_ms * 1e-3 * buf.sample_rate
    return _per_channel(
        buf,
        lambda x: kernels.chorus_process(x, float(buf.sample_rate), s.rate_hz, s.depth,
                                         centre_samples, s.feedback, s.mix),
    )


def apply_phaser(buf: AudioBuffer, s: Phaser) -> AudioBuffer:
    return _per_channel(
        buf,
        lambda x: kernels.phaser_process(x, float(buf.sample_rate), s.rate_hz, s.depth,
                                         s.centre_frequency_hz, s.feedback, s.mix),
    )


_APPLIERS = {
    Reverb: apply_reverb,
    Delay: apply_delay,
    Distortion: apply_distortion,
    Eq: apply_eq,
    Chorus: apply_chorus,
    Phaser: apply_phaser,
}


def apply_settings(buf: AudioBuffer, settings: FxSettings) -> AudioBuffer:
    return _APPLIERS[type(settings)](buf, settings)


def apply_chain(buf: AudioBuffer, chain: FxChain) -> AudioBuffer:
    out = buf
    for stage in chain.stages:
        out = apply_settings(out, stage)
    return out


def apply_fx(buf: AudioBuffer, kind: FxKind, level: int) -> AudioBuffer:
    from .settings import intensity_to_settings

    return apply_settings(buf, intensity_to_settings(kind, level))
