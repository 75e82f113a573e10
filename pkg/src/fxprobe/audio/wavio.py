"""Minimal RIFF/WAVE reader and writer.

Supports little-endian PCM (format code 1, 16- or 24-bit) and IEEE float32
(format code 3). pcm24 is read-only; the write path only needs pcm16 and
float32 for fixtures and reports.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass

import numpy as np

from ..errors import CorruptFile, UnsupportedFormat
from .buffer import AudioBuffer

_ENCODINGS = ("pcm16", "pcm24", "float32")

_PCM16_SCALE = 32768.0
_PCM24_SCALE = 8388608.0


@dataclass(frozen=True)
class WavSpec:
    encoding: str
    sample_rate: int
    channels: int

    def __post_init__(self):
        if self.encoding not in _ENCODINGS:
            raise UnsupportedFormat(f"encoding must be one of {_ENCODINGS}, got {self.encoding!r}")


def spec_for(buffer: AudioBuffer, encoding: str = "float32") -> WavSpec:
    return WavSpec(encoding, buffer.sample_rate, buffer.channels)


def read_wav(path) -> AudioBuffer:
    """Read a RIFF/WAVE file into a normalized AudioBuffer.

    pcm16 is divided by 32768, pcm24 by 8388608, float32 passes through.
    """
    with open(path, "rb") as fh:
        data = fh.read()
    if len(data) < 12 or data[:4] != b"RIFF" or data[8:12] != b"WAVE":
        raise UnsupportedFormat(f"{path}: not a RIFF/WAVE file")

    fmt = None
    payload = None
    pos = 12
    while pos + 8 <= len(data):
        chunk_id = data[pos : pos + 4]
        (chunk_size,) = struct.unpack_from("<I", data, pos + 4)
        body = data[pos + 8 : pos + 8 + chunk_size]
        if chunk_id == b"fmt ":
            if len(body) < 16:
                raise CorruptFile(f"{path}: fmt chunk too small")
            fmt = struct.unpack_from("<HHIIHH", body, 0)
        elif chunk_id == b"data":
            if len(body) < chunk_size:
                raise CorruptFile(f"{path}: data chunk truncated")
            payload = body
        pos += 8 + chunk_size + (chunk_size & 1)  # chunks are word-aligned

    if fmt is None or payload is None:
        raise CorruptFile(f"{path}: missing fmt or data chunk")
    audio_format, channels, sample_rate, _, block_align, bits = fmt
    if channels < 1:
        raise CorruptFile(f"{path}: channel count {channels}")

    if audio_format == 1 and bits == 16:
        frames = np.frombuffer(payload, dtype="<i2")
        samples = frames.astype(np.float32) / np.float32(_PCM16_SCALE)
    elif audio_format == 1 and bits == 24:
        if len(payload) % 3:
            raise CorruptFile(f"{path}: pcm24 data not a multiple of 3 bytes")
        raw = np.frombuffer(payload, dtype=np.uint8).reshape(-1, 3)
        ints = (
            raw[:, 0].astype(np.int32)
            | (raw[:, 1].astype(np.int32) << 8)
            | (raw[:, 2].astype(np.int32) << 16)
        )
        ints = np.where(ints >= 1 << 23, ints - (1 << 24), ints)
        samples = ints.astype(np.float32) / np.float32(_PCM24_SCALE)
    elif audio_format == 3 and bits == 32:
        samples = np.frombuffer(payload, dtype="<f4").astype(np.float32)
    else:
        raise UnsupportedFormat(f"{path}: format code {audio_format} at {bits} bits")

    if samples.size % channels:
        raise CorruptFile(f"{path}: data length not a whole number of frames")
    deinterleaved = samples.reshape(-1, channels).T
    return AudioBuffer(sample_rate, deinterleaved)


def write_wav(buffer: AudioBuffer, spec: WavSpec, path) -> None:
    """Write a buffer to disk. Samples outside [-1, 1] are clamped first."""
    if spec.sample_rate != buffer.sample_rate:
        raise UnsupportedFormat(
            f"spec rate {spec.sample_rate} != buffer rate {buffer.sample_rate}"
        )
    if spec.channels != buffer.channels:
        raise UnsupportedFormat(f"spec channels {spec.channels} != buffer {buffer.channels}")

    interleaved = buffer.samples.T.reshape(-1)
    if spec.encoding == "float32":
        audio_format, bits = 3, 32
        payload = interleaved.astype("<f4").tobytes()
    elif spec.encoding == "pcm16":
        audio_format, bits = 1, 16
        clamped = np.clip(interleaved.astype(np.float64), -1.0, 1.0)
        ints = np.clip(np.rint(clamped * _PCM16_SCALE), -32768, 32767).astype("<i2")
        payload = ints.tobytes()
    else:
        raise UnsupportedFormat(f"write does not support {spec.encoding} (read-only)")

    byte_rate = spec.sample_rate * spec.channels * bits // 8
    block_align = spec.channels * bits // 8
    header = b"".join(
        [
            b"RIFF",
            struct.pack("<I", 36 + len(payload)),
            b"WAVE",
            b"fmt ",
            struct.pack("<IHHIIHH", 16, audio_format, spec.channels, spec.sample_rate, byte_rate, block_align, bits),
            b"data",
            struct.pack("<I", len(payload)),
        ]
    )
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(payload)
