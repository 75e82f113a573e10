/** Reader for the primary toolkit's `#fxmanifest v1` CSV manifests. */

import { readFileSync } from 'node:fs';

import { AdapterError } from './errors.js';

export interface ManifestTrack {
  trackId: string;
  audioPath: string;
  split: string;
}

export interface Manifest {
  datasetId: string;
  task: string;
  tracks: ManifestTrack[];
}

export function loadManifest(path: string): Manifest {
  const lines = readFileSync(path, 'utf-8').split(/\r?\n/);
  if (!lines.length || !lines[0].startsWith('#fxmanifest v1')) {
    throw new AdapterError(`${path}: missing '#fxmanifest v1' header`);
  }
  const meta = new Map<string, string>();
  for (const token of lines[0].split(/\s+/).slice(2)) {
    const eq = token.indexOf('=');
    if (eq > 0) meta.set(token.slice(0, eq), token.slice(eq + 1));
  }
  const header = (lines[1] ?? '').split(',');
  if (header[0] !== 'track_id' || header[1] !== 'audio_path' || header[2] !== 'split') {
    throw new AdapterError(`${path}: columns must start with track_id,audio_path,split`);
  }
  const tracks: ManifestTrack[] = [];
  const seen = new Set<string>();
  for (let i = 2; i < lines.length; i++) {
    const line = lines[i];
    if (!line.trim()) continue;
    const cells = line.split(',');
    const trackId = cells[0]?.trim();
    if (!trackId) throw new AdapterError(`${path}:${i + 1}: empty track_id`);
    if (seen.has(trackId)) throw new AdapterError(`${path}:${i + 1}: duplicate track_id ${trackId}`);
    seen.add(trackId);
    tracks.push({ trackId, audioPath: cells[1]?.trim() ?? '', split: cells[2]?.trim() ?? '' });
  }
  return {
    datasetId: meta.get('dataset') ?? 'unknown',
    task: meta.get('task') ?? 'unknown',
    tracks,
  };
}
