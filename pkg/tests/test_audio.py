import struct

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fxprobe.audio import AudioBuffer, WavSpec, read_wav, spec_for, synth_signal, write_wav
from fxprobe.errors import CorruptFile, InvalidData, UnsupportedFormat


def test_silence_is_zero_frames():
    buf = synth_signal("silence", 1.0, 8000)
    assert buf.frames == 8000
    assert np.all(buf.samples == 0.0)


def test_impulse_single_unit_frame():
    buf = synth_signal("impulse", 1.0, 8000)
    assert buf.samples[0, 0] == 1.0
    assert float(buf.samples.sum()) == 1.0


def test_sine_rms_closed_form():
    buf = synth_signal("sine", 1.0, 16000, freq=440.0)
    rms = np.sqrt((buf.samples.astype(np.float64) ** 2).mean())
    assert abs(rms - 1.0 / np.sqrt(2.0)) < 1e-3


def test_synth_deterministic_noise():
    a = synth_signal("white_noise", 0.25, 8000, seed=9)
    b = synth_signal("white_noise", 0.25, 8000, seed=9)
    c = synth_signal("white_noise", 0.25, 8000, seed=10)
    assert np.array_equal(a.samples, b.samples)
    assert not np.array_equal(a.samples, c.samples)


def test_buffer_invariants():
    with pytest.raises(InvalidData):
        AudioBuffer(0, np.zeros(4, dtype=np.float32))
    with pytest.raises(InvalidData):
        AudioBuffer(8000, np.full(4, np.nan, dtype=np.float32))
    with pytest.raises(InvalidData):
        AudioBuffer(8000, np.zeros((3, 10), dtype=np.float32))
    with pytest.raises(InvalidData):
        synth_signal("sine", 0.0, 8000)


def test_pcm16_normalization(tmp_path):
    path = tmp_path / "x.wav"
    buf = AudioBuffer(8000, np.array([16384 / 32768.0], dtype=np.float32))
    write_wav(buf, spec_for(buf, "pcm16"), path)
    assert read_wav(path).samples[0, 0] == pytest.approx(0.5, abs=0)


def test_pcm16_integer_minimum_maps_to_minus_one(tmp_path):
    path = tmp_path / "m.wav"
    payload = struct.pack("<h", -32768)
    _write_raw_wav(path, payload, audio_format=1, bits=16, channels=1, rate=8000)
    assert read_wav(path).samples[0, 0] == -1.0


def test_float32_verbatim(tmp_path):
    path = tmp_path / "f.wav"
    buf = AudioBuffer(8000, np.array([0.25, -0.125], dtype=np.float32))
    write_wav(buf, spec_for(buf, "float32"), path)
    assert np.array_equal(read_wav(path).samples, buf.samples)


def test_pcm16_clamp_rule(tmp_path):
    path = tmp_path / "c.wav"
    buf = AudioBuffer(8000, np.array([1.7], dtype=np.float32))
    write_wav(buf, spec_for(buf, "pcm16"), path)
    assert read_wav(path).samples[0, 0] == np.float32(32767 / 32768.0)


def test_pcm16_quantization_bound(tmp_path):
    path = tmp_path / "q.wav"
    buf = AudioBuffer(8000, np.array([0.3], dtype=np.float32))
    write_wav(buf, spec_for(buf, "pcm16"), path)
    assert abs(float(read_wav(path).samples[0, 0]) - 0.3) <= 2.0**-15


def test_pcm24_read(tmp_path):
    path = tmp_path / "p24.wav"
    value = 4194304  # 2^22 -> 0.5 after /2^23
    payload = struct.pack("<i", value)[:3]
    _write_raw_wav(path, payload, audio_format=1, bits=24, channels=1, rate=8000)
    assert read_wav(path).samples[0, 0] == pytest.approx(0.5, abs=0)
    negative = struct.pack("<i", -8388608)[:3]
    _write_raw_wav(path, negative, audio_format=1, bits=24, channels=1, rate=8000)
    assert read_wav(path).samples[0, 0] == -1.0


def test_pcm24_write_rejected(tmp_path):
    buf = synth_signal("sine", 0.01, 8000)
    with pytest.raises(UnsupportedFormat):
        write_wav(buf, WavSpec("pcm24", 8000, 1), tmp_path / "no.wav")


def test_unsupported_encoding(tmp_path):
    path = tmp_path / "u.wav"
    _write_raw_wav(path, b"\x00" * 8, audio_format=7, bits=8, channels=1, rate=8000)
    with pytest.raises(UnsupportedFormat):
        read_wav(path)


def test_truncated_data_chunk(tmp_path):
    path = tmp_path / "t.wav"
    _write_raw_wav(path, struct.pack("<hh", 1, 2), audio_format=1, bits=16, channels=1,
                   rate=8000, lie_about_size=100)
    with pytest.raises(CorruptFile):
        read_wav(path)


def test_not_riff(tmp_path):
    path = tmp_path / "n.wav"
    path.write_bytes(b"OggS" + b"\x00" * 40)
    with pytest.raises(UnsupportedFormat):
        read_wav(path)


def test_stereo_roundtrip(tmp_path):
    data = np.stack([np.linspace(-1, 1, 64, dtype=np.float32),
                     np.linspace(1, -1, 64, dtype=np.float32)])
    buf = AudioBuffer(22050, data)
    path = tmp_path / "s.wav"
    write_wav(buf, spec_for(buf), path)
    back = read_wav(path)
    assert back.channels == 2
    assert np.array_equal(back.samples, buf.samples)


def test_spec_mismatch_rejected(tmp_path):
    buf = synth_signal("sine", 0.01, 8000)
    with pytest.raises(UnsupportedFormat):
        write_wav(buf, WavSpec("float32", 44100, 1), tmp_path / "r.wav")
    with pytest.raises(UnsupportedFormat):
        write_wav(buf, WavSpec("float32", 8000, 2), tmp_path / "ch.wav")


@settings(max_examples=25, deadline=None)
@given(st.lists(st.floats(min_value=-2.0, max_value=2.0, allow_nan=False, width=32),
                min_size=1, max_size=64))
def test_roundtrip_property(tmp_path_factory, values):
    """decode(encode(x, E)) is within E's quantization bound of clamp(x)."""
    path = tmp_path_factory.mktemp("rt") / "x.wav"
    buf = AudioBuffer(8000, np.array(values, dtype=np.float32))
    write_wav(buf, spec_for(buf, "float32"), path)
    assert np.array_equal(read_wav(path).samples, buf.samples)
    write_wav(buf, spec_for(buf, "pcm16"), path)
    clamped = np.clip(buf.samples.astype(np.float64), -1.0, 1.0)
    err = np.abs(read_wav(path).samples.astype(np.float64) - clamped).max()
    assert err <= 2.0**-15


def _write_raw_wav(path, payload, audio_format, bits, channels, rate, lie_about_size=None):
    data_size = lie_about_size if lie_about_size is not None else len(payload)
    header = b"".join([
        b"RIFF", struct.pack("<I", 36 + data_size), b"WAVE",
        b"fmt ", struct.pack("<IHHIIHH", 16, audio_format, channels, rate,
                             rate * channels * bits // 8, channels * bits // 8, bits),
        b"data", struct.pack("<I", data_size),
    ])
    path.write_bytes(header + payload)
