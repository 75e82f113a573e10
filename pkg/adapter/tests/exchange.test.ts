import { describe, expect, it } from 'vitest';

import { validateCondition, conditionSlug } from '../src/conditions.js';
import { AdapterError, DimensionMismatch } from '../src/errors.js';
import { formatExchange, parseExchange } from '../src/exchange.js';

const header = { modelId: 'mert', dim: 3, pooling: 'mean-over-time' };

describe('exchange format', () => {
  it('writes a header declaring model, dim and pooling', () => {
    const text = formatExchange(header, []);
    expect(text.split('\n')[0]).toBe('#fxemb v1 model=mert dim=3 pooling=mean-over-time');
  });

  it('round-trips records in sorted order', () => {
    const records = [
      { trackId: 'b', condition: 'clean', vector: Float64Array.from([1, 2, 3]) },
      { trackId: 'a', condition: 'fx:distortion:5', vector: Float64Array.from([0.1, -0.25, 1e-9]) },
      { trackId: 'a', condition: 'clean', vector: Float64Array.from([4, 5, 6]) },
    ];
    const text = formatExchange(header, records);
    const parsed = parseExchange(text);
    expect(parsed.header).toEqual(header);
    expect(parsed.records.map((r) => [r.trackId, r.condition])).toEqual([
      ['a', 'clean'],
      ['a', 'fx:distortion:5'],
      ['b', 'clean'],
    ]);
    expect(Array.from(parsed.records[1].vector)).toEqual([0.1, -0.25, 1e-9]);
  });

  it('rejects records of the wrong dimension', () => {
    const records = [{ trackId: 'a', condition: 'clean', vector: Float64Array.from([1, 2]) }];
    expect(() => formatExchange(header, records)).toThrow(DimensionMismatch);
  });

  it('rejects non-finite values', () => {
    const records = [{ trackId: 'a', condition: 'clean', vector: Float64Array.from([1, NaN, 3]) }];
    expect(() => formatExchange(header, records)).toThrow(AdapterError);
  });
});

describe('condition grammar', () => {
  it('accepts the four condition shapes', () => {
    for (const text of ['clean', 'fx:reverb:10', 'chain:ratm', 'chainstage:u2:2']) {
      expect(validateCondition(text)).toBe(text);
    }
  });

  it('rejects malformed conditions', () => {
    for (const text of ['fx:reverb:0', 'fx:flanger:3', 'chainstage:u2:0', 'levels:3', '']) {
      expect(() => validateCondition(text)).toThrow(AdapterError);
    }
  });

  it('slug replaces colons', () => {
    expect(conditionSlug('fx:distortion:5')).toBe('fx_distortion_5');
  });
});
