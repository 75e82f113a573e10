/**
 * The extraction driver: walks the manifest x condition grid, finds (or
 * renders) the processed audio, resamples to the model rate, embeds, and
 * writes one exchange file.
 *
 * Processed audio is looked up in rendersDir as <track>__<condition-slug>.wav;
 * when absent and a render CLI is configured, the primary toolkit's
 * `render` subcommand produces it on demand.
 */

import { spawnSync } from 'node:child_process';
import { existsSync, mkdirSync } from 'node:fs';
import { dirname, isAbsolute, join, resolve } from 'node:path';

import { embedDeterministic } from './backends/deterministic.js';
import { embedTransformers } from './backends/transformers.js';
import { conditionSlug, validateCondition } from './conditions.js';
import { AdapterError, DimensionMismatch } from './errors.js';
import { writeExchange } from './exchange.js';
import type { Manifest } from './manifest.js';
import type { AdapterConfig } from './models.js';
import { resampleLinear } from './resample.js';
import { readWavMono } from './wav.js';

export interface ExtractOptions {
  manifest: Manifest;
  manifestDir: string;
  conditions: string[];
  cfg: AdapterConfig;
  outPath: string;
  rendersDir?: string;
  renderCli?: string; // e.g. "fxprobe"; enables on-demand rendering
}

function cleanAudioPath(options: ExtractOptions, audioPath: string): string {
  return isAbsolute(audioPath) ? audioPath : resolve(options.manifestDir, audioPath);
}

function renderedPath(options: ExtractOptions, trackId: string, condition: string): string {
  const dir = options.rendersDir ?? join(options.manifestDir, 'renders');
  return join(dir, `${trackId}__${conditionSlug(condition)}.wav`);
}

function renderOnDemand(options: ExtractOptions, cleanPath: string, condition: string, target: string): void {
  if (!options.renderCli) {
    throw new AdapterError(
      `missing rendered audio for condition '${condition}' (${target}); ` +
        'pre-render with the primary CLI or pass --render-cli',
    );
  }
  mkdirSync(dirname(target), { recursive: true });
  const parts = condition.split(':');
  const args = ['render', '--in', cleanPath, '--out', target];
  if (parts[0] === 'fx') {
    args.push('--fx', parts[1], '--level', parts[2]);
  } else if (parts[0] === 'chain') {
    args.push('--chain', parts[1]);
  } else {
    throw new AdapterError(
      `cannot render condition '${condition}' via the render subcommand; pre-render it instead`,
    );
  }
  const result = spawnSync(options.renderCli, args, { stdio: 'pipe', encoding: 'utf-8' });
  if (result.error || result.status !== 0) {
    throw new AdapterError(
      `render failed for '${condition}': ${result.error ? String(result.error) : result.stderr}`,
    );
  }
}

async function embed(samples: Float64Array, cfg: AdapterConfig): Promise<Float64Array> {
  if (cfg.backend === 'deterministic') {
    return embedDeterministic(samples, cfg.model.targetSampleRate, cfg.model.dim);
  }
  return embedTransformers(samples, cfg);
}

export async function extract(options: ExtractOptions): Promise<string> {
  const conditions = options.conditions.map(validateCondition);
  const records = [];
  const { cfg } = options;
  for (const track of [...options.manifest.tracks].sort((a, b) => a.trackId.localeCompare(b.trackId))) {
    const cleanPath = cleanAudioPath(options, track.audioPath);
    for (const condition of conditions) {
      let wavPath: string;
      if (condition === 'clean') {
        wavPath = cleanPath;
      } else {
        wavPath = renderedPath(options, track.trackId, condition);
        if (!existsSync(wavPath)) renderOnDemand(options, cleanPath, condition, wavPath);
      }
      const audio = readWavMono(wavPath);
      const resampled = resampleLinear(audio.samples, audio.sampleRate, cfg.model.targetSampleRate);
      const vector = await embed(resampled, cfg);
      if (vector.length !== cfg.model.dim) {
        throw new DimensionMismatch(
          `backend produced dim ${vector.length}, expected ${cfg.model.dim} for ${cfg.model.modelId}`,
        );
      }
      records.push({ trackId: track.trackId, condition, vector });
    }
  }
  writeExchange(options.outPath, {
    modelId: cfg.model.modelId,
    dim: cfg.model.dim,
    pooling: cfg.pooling,
  }, records);
  return options.outPath;
}
