/** Linear-interpolation resampling; the adapter owns rate conversion. */

export function resampleLinear(samples: Float64Array, srcRate: number, dstRate: number): Float64Array {
  if (srcRate === dstRate) return samples;
  const duration = samples.length / srcRate;
  const outLength = Math.max(1, Math.round(duration * dstRate));
  const out = new Float64Array(outLength);
  const ratio = srcRate / dstRate;
  for (let i = 0; i < outLength; i++) {
    const position = i * ratio;
    const i0 = Math.floor(position);
    const frac = position - i0;
    const a = samples[Math.min(i0, samples.length - 1)];
    const b = samples[Math.min(i0 + 1, samples.length - 1)];
    out[i] = a * (1 - frac) + b * frac;
  }
  return out;
}
