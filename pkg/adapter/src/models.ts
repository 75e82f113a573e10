/**
 * Model registry. MERT pools 1024-unit hidden states at 24 kHz; CLAP uses
 * 48 kHz log-mel input. Qwen2-Audio's encoder width follows its Whisper-style
 * front end. Checkpoint ids are the defaults the transformers backend loads.
 */

import { AdapterError } from './errors.js';

export type ModelId = 'mert' | 'clap' | 'qwen';
export type Pooling = 'mean-over-time' | 'final-layer';

export interface ModelSpec {
  modelId: ModelId;
  dim: number;
  targetSampleRate: number;
  checkpoint: string;
}

export const MODELS: Record<ModelId, ModelSpec> = {
  mert: { modelId: 'mert', dim: 1024, targetSampleRate: 24000, checkpoint: 'm-a-p/MERT-v1-330M' },
  clap: { modelId: 'clap', dim: 512, targetSampleRate: 48000, checkpoint: 'laion/larger_clap_music' },
  qwen: { modelId: 'qwen', dim: 1280, targetSampleRate: 16000, checkpoint: 'Qwen/Qwen2-Audio-7B' },
};

export interface AdapterConfig {
  model: ModelSpec;
  pooling: Pooling;
  layerIndex?: number; // optional specific hidden layer; default final
  backend: 'deterministic' | 'transformers';
}

export function resolveModel(name: string): ModelSpec {
  const spec = MODELS[name as ModelId];
  if (!spec) {
    throw new AdapterError(`unknown model '${name}'; expected one of ${Object.keys(MODELS).join(', ')}`);
  }
  return spec;
}
