import { createHash } from 'node:crypto';
import { mkdtempSync, readFileSync } from 'node:fs';
import { tmpdir } from 'node:os';
import { join } from 'node:path';

import { describe, expect, it } from 'vitest';

import { embedDeterministic } from '../src/backends/deterministic.js';
import { AdapterError } from '../src/errors.js';
import { parseExchange } from '../src/exchange.js';
import { extract } from '../src/extract.js';
import { loadManifest } from '../src/manifest.js';
import { MODELS } from '../src/models.js';
import { sineWave, writeFloat32Wav, writeManifest } from './helpers.js';

function setupFixture(): { dir: string; manifestPath: string } {
  const dir = mkdtempSync(join(tmpdir(), 'fxemb-extract-'));
  for (const [id, freq] of [
    ['t0', 220],
    ['t1', 440],
  ] as const) {
    writeFloat32Wav(join(dir, `${id}.wav`), sineWave(freq, 0.3, 24000), 24000);
  }
  const manifestPath = writeManifest(dir, [
    { id: 't0', wav: 't0.wav' },
    { id: 't1', wav: 't1.wav' },
  ]);
  return { dir, manifestPath };
}

function sha256(path: string): string {
  return createHash('sha256').update(readFileSync(path)).digest('hex');
}

describe('extract', () => {
  it('emits one record per (track, condition) with the declared dimension', async () => {
    const { dir, manifestPath } = setupFixture();
    const out = join(dir, 'mert.fxemb');
    await extract({
      manifest: loadManifest(manifestPath),
      manifestDir: dir,
      conditions: ['clean'],
      cfg: { model: MODELS.mert, pooling: 'mean-over-time', backend: 'deterministic' },
      outPath: out,
    });
    const parsed = parseExchange(readFileSync(out, 'utf-8'));
    expect(parsed.header.modelId).toBe('mert');
    expect(parsed.header.dim).toBe(1024);
    expect(parsed.records).toHaveLength(2);
    for (const record of parsed.records) expect(record.vector).toHaveLength(1024);
  });

  it('is digest-stable across repeated runs (deterministic mode)', async () => {
    const { dir, manifestPath } = setupFixture();
    const manifest = loadManifest(manifestPath);
    const cfg = { model: MODELS.clap, pooling: 'mean-over-time' as const, backend: 'deterministic' as const };
    const outA = join(dir, 'a.fxemb');
    const outB = join(dir, 'b.fxemb');
    await extract({ manifest, manifestDir: dir, conditions: ['clean'], cfg, outPath: outA });
    await extract({ manifest, manifestDir: dir, conditions: ['clean'], cfg, outPath: outB });
    expect(sha256(outA)).toBe(sha256(outB));
  });

  it('uses pre-rendered audio for fx conditions', async () => {
    const { dir, manifestPath } = setupFixture();
    const renders = join(dir, 'renders');
    for (const id of ['t0', 't1']) {
      writeFloat32Wav(join(renders, `${id}__fx_distortion_5.wav`), sineWave(330, 0.3, 24000), 24000);
    }
    const out = join(dir, 'fx.fxemb');
    await extract({
      manifest: loadManifest(manifestPath),
      manifestDir: dir,
      conditions: ['clean', 'fx:distortion:5'],
      cfg: { model: MODELS.qwen, pooling: 'mean-over-time', backend: 'deterministic' },
      outPath: out,
      rendersDir: renders,
    });
    const parsed = parseExchange(readFileSync(out, 'utf-8'));
    expect(parsed.records).toHaveLength(4);
    expect(new Set(parsed.records.map((r) => r.condition))).toEqual(
      new Set(['clean', 'fx:distortion:5']),
    );
  });

  it('fails with AdapterError when renders are missing and no CLI is configured', async () => {
    const { dir, manifestPath } = setupFixture();
    await expect(
      extract({
        manifest: loadManifest(manifestPath),
        manifestDir: dir,
        conditions: ['fx:reverb:3'],
        cfg: { model: MODELS.mert, pooling: 'mean-over-time', backend: 'deterministic' },
        outPath: join(dir, 'x.fxemb'),
      }),
    ).rejects.toThrow(AdapterError);
  });

  it('resamples inputs at foreign rates to the model rate', async () => {
    const dir = mkdtempSync(join(tmpdir(), 'fxemb-rate-'));
    writeFloat32Wav(join(dir, 'hi.wav'), sineWave(440, 0.3, 48000), 48000);
    const manifestPath = writeManifest(dir, [{ id: 'hi', wav: 'hi.wav' }]);
    const out = join(dir, 'out.fxemb');
    await extract({
      manifest: loadManifest(manifestPath),
      manifestDir: dir,
      conditions: ['clean'],
      cfg: { model: MODELS.mert, pooling: 'mean-over-time', backend: 'deterministic' },
      outPath: out,
    });
    expect(parseExchange(readFileSync(out, 'utf-8')).records[0].vector).toHaveLength(1024);
  });
});

describe('deterministic backend', () => {
  it('identical audio gives identical vectors', () => {
    const audio = Float64Array.from(sineWave(440, 0.2, 24000));
    const a = embedDeterministic(audio, 24000, 256);
    const b = embedDeterministic(audio, 24000, 256);
    expect(Array.from(a)).toEqual(Array.from(b));
  });

  it('different audio gives different vectors', () => {
    const a = embedDeterministic(Float64Array.from(sineWave(440, 0.2, 24000)), 24000, 128);
    const b = embedDeterministic(Float64Array.from(sineWave(880, 0.2, 24000)), 24000, 128);
    expect(Array.from(a)).not.toEqual(Array.from(b));
  });

  it('fills any requested dimension with finite values', () => {
    const audio = Float64Array.from(sineWave(220, 0.2, 48000));
    for (const dim of [512, 1024, 1280]) {
      const v = embedDeterministic(audio, 48000, dim);
      expect(v).toHaveLength(dim);
      expect(Array.from(v).every(Number.isFinite)).toBe(true);
    }
  });
});
