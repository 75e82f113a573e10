/**
 * Minimal RIFF/WAVE reader: little-endian PCM 16/24-bit and IEEE float32.
 * Returns the mono mix (mean of channels) as Float64Array.
 */

import { readFileSync } from 'node:fs';

import { AdapterError } from './errors.js';

export interface WavAudio {
  sampleRate: number;
  samples: Float64Array; // mono mix
}

export function readWavMono(path: string): WavAudio {
  const data = readFileSync(path);
  if (data.length < 12 || data.toString('ascii', 0, 4) !== 'RIFF' || data.toString('ascii', 8, 12) !== 'WAVE') {
    throw new AdapterError(`${path}: not a RIFF/WAVE file`);
  }

  let fmt: { format: number; channels: number; rate: number; bits: number } | null = null;
  let payload: Buffer | null = null;
  let pos = 12;
  while (pos + 8 <= data.length) {
    const chunkId = data.toString('ascii', pos, pos + 4);
    const chunkSize = data.readUInt32LE(pos + 4);
    const body = data.subarray(pos + 8, pos + 8 + chunkSize);
    if (chunkId === 'fmt ') {
      if (body.length < 16) throw new AdapterError(`${path}: fmt chunk too small`);
      fmt = {
        format: body.readUInt16LE(0),
        channels: body.readUInt16LE(2),
        rate: body.readUInt32LE(4),
        bits: body.readUInt16LE(14),
      };
    } else if (chunkId === 'data') {
      if (body.length < chunkSize) throw new AdapterError(`${path}: data chunk truncated`);
      payload = body;
    }
    pos += 8 + chunkSize + (chunkSize & 1);
  }
  if (!fmt || !payload) throw new AdapterError(`${path}: missing fmt or data chunk`);

  const { format, channels, rate, bits } = fmt;
  let interleaved: Float64Array;
  if (format === 1 && bits === 16) {
    const n = Math.floor(payload.length / 2);
    interleaved = new Float64Array(n);
    for (let i = 0; i < n; i++) interleaved[i] = payload.readInt16LE(i * 2) / 32768;
  } else if (format === 1 && bits === 24) {
    const n = Math.floor(payload.length / 3);
    interleaved = new Float64Array(n);
    for (let i = 0; i < n; i++) {
      let v = payload[i * 3] | (payload[i * 3 + 1] << 8) | (payload[i * 3 + 2] << 16);
      if (v >= 1 << 23) v -= 1 << 24;
      interleaved[i] = v / 8388608;
    }
  } else if (format === 3 && bits === 32) {
    const n = Math.floor(payload.length / 4);
    interleaved = new Float64Array(n);
    for (let i = 0; i < n; i++) interleaved[i] = payload.readFloatLE(i * 4);
  } else {
    throw new AdapterError(`${path}: unsupported format code ${format} at ${bits} bits`);
  }

  const frames = Math.floor(interleaved.length / channels);
  const mono = new Float64Array(frames);
  for (let f = 0; f < frames; f++) {
    let acc = 0;
    for (let c = 0; c < channels; c++) acc += interleaved[f * channels + c];
    mono[f] = acc / channels;
  }
  return { sampleRate: rate, samples: mono };
}
