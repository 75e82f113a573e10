/** Writer (and self-check parser) for the `#fxemb v1` exchange format. */

import { writeFileSync } from 'node:fs';

import { AdapterError, DimensionMismatch } from './errors.js';

export interface ExchangeRecord {
  trackId: string;
  condition: string;
  vector: Float64Array;
}

export interface ExchangeHeader {
  modelId: string;
  dim: number;
  pooling: string;
}

/** Numbers use JS shortest round-trip formatting (>= 9 significant digits
 *  whenever that precision is needed to reproduce the value). */
export function formatExchange(header: ExchangeHeader, records: ExchangeRecord[]): string {
  const lines = [`#fxemb v1 model=${header.modelId} dim=${header.dim} pooling=${header.pooling}`];
  const sorted = [...records].sort((a, b) =>
    a.trackId === b.trackId
      ? a.condition.localeCompare(b.condition)
      : a.trackId.localeCompare(b.trackId),
  );
  for (const record of sorted) {
    if (record.vector.length !== header.dim) {
      throw new DimensionMismatch(
        `(${record.trackId}, ${record.condition}): dim ${record.vector.length} != ${header.dim}`,
      );
    }
    const values = Array.from(record.vector, (v) => {
      if (!Number.isFinite(v)) throw new AdapterError(`non-finite value for ${record.trackId}`);
      return String(v);
    }).join(',');
    lines.push(`${record.trackId}\t${record.condition}\t${values}`);
  }
  return lines.join('\n') + '\n';
}

export function writeExchange(path: string, header: ExchangeHeader, records: ExchangeRecord[]): void {
  writeFileSync(path, formatExchange(header, records), 'utf-8');
}

/** Parse-back used by tests to confirm what we wrote is self-consistent. */
export function parseExchange(text: string): { header: ExchangeHeader; records: ExchangeRecord[] } {
  const lines = text.split('\n').filter((l) => l.length > 0);
  if (!lines.length || !lines[0].startsWith('#fxemb v1')) {
    throw new AdapterError("missing '#fxemb v1' header");
  }
  const fields = new Map<string, string>();
  for (const token of lines[0].split(/\s+/).slice(2)) {
    const eq = token.indexOf('=');
    if (eq > 0) fields.set(token.slice(0, eq), token.slice(eq + 1));
  }
  const dim = Number(fields.get('dim'));
  if (!fields.get('model') || !Number.isInteger(dim)) {
    throw new AdapterError('header must declare model=<id> and dim=<D>');
  }
  const records: ExchangeRecord[] = [];
  for (const line of lines.slice(1)) {
    const parts = line.split('\t');
    if (parts.length !== 3) throw new AdapterError(`bad record line: ${line}`);
    const vector = Float64Array.from(parts[2].split(','), Number);
    if (vector.length !== dim || vector.some((v) => !Number.isFinite(v))) {
      throw new DimensionMismatch(`bad vector for ${parts[0]}`);
    }
    records.push({ trackId: parts[0], condition: parts[1], vector });
  }
  return {
    header: { modelId: fields.get('model')!, dim, pooling: fields.get('pooling') ?? 'unknown' },
    records,
  };
}
