import { mkdirSync, writeFileSync } from 'node:fs';
import { dirname, join } from 'node:path';

export function writeFloat32Wav(path: string, samples: number[], sampleRate: number, channels = 1): void {
  const payload = Buffer.alloc(samples.length * 4);
  samples.forEach((v, i) => payload.writeFloatLE(v, i * 4));
  writeWavFile(path, payload, 3, 32, channels, sampleRate);
}

export function writePcm16Wav(path: string, ints: number[], sampleRate: number, channels = 1): void {
  const payload = Buffer.alloc(ints.length * 2);
  ints.forEach((v, i) => payload.writeInt16LE(v, i * 2));
  writeWavFile(path, payload, 1, 16, channels, sampleRate);
}

function writeWavFile(
  path: string,
  payload: Buffer,
  format: number,
  bits: number,
  channels: number,
  rate: number,
): void {
  mkdirSync(dirname(path), { recursive: true });
  const header = Buffer.alloc(44);
  header.write('RIFF', 0, 'ascii');
  header.writeUInt32LE(36 + payload.length, 4);
  header.write('WAVE', 8, 'ascii');
  header.write('fmt ', 12, 'ascii');
  header.writeUInt32LE(16, 16);
  header.writeUInt16LE(format, 20);
  header.writeUInt16LE(channels, 22);
  header.writeUInt32LE(rate, 24);
  header.writeUInt32LE((rate * channels * bits) / 8, 28);
  header.writeUInt16LE((channels * bits) / 8, 32);
  header.writeUInt16LE(bits, 34);
  header.write('data', 36, 'ascii');
  header.writeUInt32LE(payload.length, 40);
  writeFileSync(path, Buffer.concat([header, payload]));
}

export function sineWave(freq: number, seconds: number, rate: number, amp = 0.6): number[] {
  const n = Math.round(seconds * rate);
  return Array.from({ length: n }, (_, i) => amp * Math.sin((2 * Math.PI * freq * i) / rate));
}

export function writeManifest(dir: string, tracks: { id: string; wav: string }[]): string {
  const lines = [
    '#fxmanifest v1 task=va_regression dataset=tsdemo',
    'track_id,audio_path,split,valence,arousal',
  ];
  for (const t of tracks) lines.push(`${t.id},${t.wav},train,0.5,0.5`);
  const path = join(dir, 'manifest.csv');
  writeFileSync(path, lines.join('\n') + '\n');
  return path;
}
