/**
 * Real checkpoint backend via @huggingface/transformers (transformers.js).
 * Loaded lazily; any failure (package absent, checkpoint unreachable,
 * unsupported architecture) surfaces as AdapterError so callers can fall
 * back to the deterministic backend explicitly.
 */

import { AdapterError } from '../errors.js';
import type { AdapterConfig } from '../models.js';

type FeaturePipeline = (audio: Float32Array, options?: object) => Promise<{ data: Float32Array; dims: number[] }>;

const pipelines = new Map<string, FeaturePipeline>();

async function loadPipeline(checkpoint: string): Promise<FeaturePipeline> {
  const cached = pipelines.get(checkpoint);
  if (cached) return cached;
  let transformers: any;
  try {
    // non-literal specifier: the package is optional and may be absent
    const moduleName = '@huggingface/transformers';
    transformers = await import(moduleName);
  } catch (err) {
    throw new AdapterError(
      `transformers backend unavailable (install @huggingface/transformers): ${String(err)}`,
    );
  }
  try {
    const pipe = (await transformers.pipeline('feature-extraction', checkpoint)) as FeaturePipeline;
    pipelines.set(checkpoint, pipe);
    return pipe;
  } catch (err) {
    throw new AdapterError(`checkpoint '${checkpoint}' unavailable: ${String(err)}`);
  }
}

export async function embedTransformers(
  samples: Float64Array,
  cfg: AdapterConfig,
): Promise<Float64Array> {
  const pipe = await loadPipeline(cfg.model.checkpoint);
  const audio = Float32Array.from(samples);
  let output;
  try {
    output = await pipe(audio, { pooling: cfg.pooling === 'mean-over-time' ? 'mean' : 'none' });
  } catch (err) {
    throw new AdapterError(`inference failed for '${cfg.model.checkpoint}': ${String(err)}`);
  }
  const flat = Float64Array.from(output.data);
  if (cfg.pooling === 'mean-over-time' && output.dims.length === 2) {
    return flat; // already pooled by the pipeline
  }
  // mean over the time axis of a [frames, hidden] tensor
  const hidden = output.dims[output.dims.length - 1];
  const frames = flat.length / hidden;
  const pooled = new Float64Array(hidden);
  for (let t = 0; t < frames; t++) {
    for (let h = 0; h < hidden; h++) pooled[h] += flat[t * hidden + h];
  }
  for (let h = 0; h < hidden; h++) pooled[h] /= frames;
  return pooled;
}
