/**
 * Cross-component checks: adapter output must pass the primary toolkit's
 * own loader, and the primary `render` subcommand must be drivable from the
 * adapter for on-demand condition rendering. Skipped when the `fxprobe`
 * CLI is not on PATH.
 */

import { spawnSync } from 'node:child_process';
import { mkdtempSync, readFileSync } from 'node:fs';
import { tmpdir } from 'node:os';
import { join } from 'node:path';

import { describe, expect, it } from 'vitest';

import { parseExchange } from '../src/exchange.js';
import { extract } from '../src/extract.js';
import { loadManifest } from '../src/manifest.js';
import { MODELS } from '../src/models.js';
import { sineWave, writeFloat32Wav, writeManifest } from './helpers.js';

const FXPROBE = 'fxprobe';

function fxprobeAvailable(): boolean {
  const probe = spawnSync(FXPROBE, ['--help'], { stdio: 'pipe' });
  return !probe.error && probe.status === 0;
}

const available = fxprobeAvailable();
const maybe = available ? it : it.skip;

describe('primary-toolkit integration', () => {
  maybe('adapter output parses under the primary load_embeddings with zero errors', async () => {
    const dir = mkdtempSync(join(tmpdir(), 'fxemb-integ-'));
    writeFloat32Wav(join(dir, 'a.wav'), sineWave(440, 0.3, 24000), 24000);
    writeFloat32Wav(join(dir, 'b.wav'), sineWave(220, 0.3, 24000), 24000);
    const manifestPath = writeManifest(dir, [
      { id: 'a', wav: 'a.wav' },
      { id: 'b', wav: 'b.wav' },
    ]);
    const out = join(dir, 'mert.fxemb');
    await extract({
      manifest: loadManifest(manifestPath),
      manifestDir: dir,
      conditions: ['clean'],
      cfg: { model: MODELS.mert, pooling: 'mean-over-time', backend: 'deterministic' },
      outPath: out,
    });
    const result = spawnSync(FXPROBE, ['embed', '--validate', out], {
      stdio: 'pipe',
      encoding: 'utf-8',
    });
    expect(result.status).toBe(0);
    expect(result.stdout).toContain('model=mert');
    expect(result.stdout).toContain('dim=1024');
  }, 30000);

  maybe('renders fx conditions on demand through the primary render subcommand', async () => {
    const dir = mkdtempSync(join(tmpdir(), 'fxemb-render-'));
    writeFloat32Wav(join(dir, 'a.wav'), sineWave(330, 0.3, 24000), 24000);
    const manifestPath = writeManifest(dir, [{ id: 'a', wav: 'a.wav' }]);
    const out = join(dir, 'clap.fxemb');
    await extract({
      manifest: loadManifest(manifestPath),
      manifestDir: dir,
      conditions: ['clean', 'fx:distortion:7', 'chain:ratm'],
      cfg: { model: MODELS.clap, pooling: 'mean-over-time', backend: 'deterministic' },
      outPath: out,
      renderCli: FXPROBE,
    });
    const parsed = parseExchange(readFileSync(out, 'utf-8'));
    expect(parsed.records).toHaveLength(3);
    const validate = spawnSync(FXPROBE, ['embed', '--validate', out], {
      stdio: 'pipe',
      encoding: 'utf-8',
    });
    expect(validate.status).toBe(0);
  }, 60000);
});
