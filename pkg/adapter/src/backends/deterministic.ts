/**
 * Deterministic offline backend: a fixed spectral summary expanded to the
 * model's declared dimension. No weights, no randomness; identical audio
 * yields identical vectors, which makes extraction digest-stable. Used for
 * pipeline validation when checkpoints are unavailable.
 */

const FRAME = 1024;
const HOP = 256;
const BANDS = 64;
const LOG_FLOOR = 1e-10;

function hzToMel(f: number): number {
  return 2595 * Math.log10(1 + f / 700);
}

function melToHz(m: number): number {
  return 700 * (10 ** (m / 2595) - 1);
}

/** Plain DFT magnitude of one Hann-windowed frame (desk-scale inputs). */
function frameMagnitudes(frame: Float64Array): Float64Array {
  const n = frame.length;
  const bins = n / 2 + 1;
  const windowed = new Float64Array(n);
  for (let i = 0; i < n; i++) {
    windowed[i] = frame[i] * (0.5 - 0.5 * Math.cos((2 * Math.PI * i) / n));
  }
  const mags = new Float64Array(bins);
  for (let k = 0; k < bins; k++) {
    let re = 0;
    let im = 0;
    const w = (-2 * Math.PI * k) / n;
    for (let i = 0; i < n; i++) {
      re += windowed[i] * Math.cos(w * i);
      im += windowed[i] * Math.sin(w * i);
    }
    mags[k] = Math.hypot(re, im);
  }
  return mags;
}

function melFilters(sampleRate: number): Float64Array[] {
  const bins = FRAME / 2 + 1;
  const edges: number[] = [];
  const top = hzToMel(sampleRate / 2);
  for (let b = 0; b < BANDS + 2; b++) edges.push(melToHz((top * b) / (BANDS + 1)));
  const filters: Float64Array[] = [];
  for (let b = 0; b < BANDS; b++) {
    const [lo, mid, hi] = [edges[b], edges[b + 1], edges[b + 2]];
    const filt = new Float64Array(bins);
    let total = 0;
    for (let k = 0; k < bins; k++) {
      const f = (k * sampleRate) / FRAME;
      const rising = (f - lo) / Math.max(mid - lo, 1e-12);
      const falling = (hi - f) / Math.max(hi - mid, 1e-12);
      filt[k] = Math.max(0, Math.min(rising, falling));
      total += filt[k];
    }
    if (total > 0) for (let k = 0; k < bins; k++) filt[k] /= total;
    filters.push(filt);
  }
  return filters;
}

function bandStats(samples: Float64Array, sampleRate: number): Float64Array {
  const nFrames = Math.max(1, Math.floor((samples.length - FRAME) / HOP) + 1);
  const filters = melFilters(sampleRate);
  const sums = new Float64Array(BANDS);
  const sumSquares = new Float64Array(BANDS);
  for (let t = 0; t < nFrames; t++) {
    const offset = t * HOP;
    const frame = samples.subarray(offset, offset + FRAME);
    const padded = frame.length === FRAME ? frame : pad(frame);
    const mags = frameMagnitudes(padded);
    for (let b = 0; b < BANDS; b++) {
      let energy = 0;
      for (let k = 0; k < mags.length; k++) energy += filters[b][k] * mags[k] * mags[k];
      const logE = Math.log(Math.max(energy, LOG_FLOOR));
      sums[b] += logE;
      sumSquares[b] += logE * logE;
    }
  }
  const stats = new Float64Array(2 * BANDS);
  for (let b = 0; b < BANDS; b++) {
    const mean = sums[b] / nFrames;
    const variance = Math.max(0, sumSquares[b] / nFrames - mean * mean);
    stats[b] = mean;
    stats[BANDS + b] = Math.sqrt(variance);
  }
  return stats;
}

function pad(frame: Float64Array): Float64Array {
  const out = new Float64Array(FRAME);
  out.set(frame);
  return out;
}

/** Integer hash (splitmix-style) driving the per-index expansion weights. */
function mix(i: number): number {
  let h = (i + 0x9e3779b9) >>> 0;
  h = Math.imul(h ^ (h >>> 16), 0x85ebca6b) >>> 0;
  h = Math.imul(h ^ (h >>> 13), 0xc2b2ae35) >>> 0;
  h ^= h >>> 16;
  return h / 0xffffffff; // in [0, 1]
}

export function embedDeterministic(samples: Float64Array, sampleRate: number, dim: number): Float64Array {
  const base = bandStats(samples, sampleRate);
  const out = new Float64Array(dim);
  for (let i = 0; i < dim; i++) {
    const a = base[i % base.length];
    const b = base[(i * 7 + 3) % base.length];
    const wa = 0.5 + mix(i);
    const wb = mix(i * 31 + 1) - 0.5;
    out[i] = wa * a + wb * b;
  }
  return out;
}
