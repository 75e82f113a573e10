export { embedDeterministic } from './backends/deterministic.js';
export { embedTransformers } from './backends/transformers.js';
export { conditionSlug, validateCondition } from './conditions.js';
export { AdapterError, DimensionMismatch } from './errors.js';
export { formatExchange, parseExchange, writeExchange } from './exchange.js';
export type { ExchangeHeader, ExchangeRecord } from './exchange.js';
export { extract } from './extract.js';
export type { ExtractOptions } from './extract.js';
export { loadManifest } from './manifest.js';
export type { Manifest, ManifestTrack } from './manifest.js';
export { MODELS, resolveModel } from './models.js';
export type { AdapterConfig, ModelId, ModelSpec, Pooling } from './models.js';
export { resampleLinear } from './resample.js';
export { readWavMono } from './wav.js';
