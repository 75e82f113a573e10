/** Condition grammar shared with the primary toolkit:
 *  clean | fx:<kind>:<level> | chain:<name> | chainstage:<name>:<k>
 */

import { AdapterError } from './errors.js';

const FX_KINDS = new Set(['reverb', 'delay', 'distortion', 'eq', 'chorus', 'phaser']);

export function validateCondition(text: string): string {
  const parts = text.trim().split(':');
  if (parts.length === 1 && parts[0] === 'clean') return 'clean';
  if (parts.length === 3 && parts[0] === 'fx') {
    const level = Number(parts[2]);
    if (!FX_KINDS.has(parts[1]) || !Number.isInteger(level) || level < 1 || level > 10) {
      throw new AdapterError(`bad condition '${text}'`);
    }
    return `fx:${parts[1]}:${level}`;
  }
  if (parts.length === 2 && parts[0] === 'chain' && parts[1]) return `chain:${parts[1]}`;
  if (parts.length === 3 && parts[0] === 'chainstage') {
    const stage = Number(parts[2]);
    if (!parts[1] || !Number.isInteger(stage) || stage < 1) {
      throw new AdapterError(`bad condition '${text}'`);
    }
    return `chainstage:${parts[1]}:${stage}`;
  }
  throw new AdapterError(`bad condition '${text}'`);
}

/** Filesystem-safe name for a rendered (track, condition) WAV. */
export function conditionSlug(condition: string): string {
  return condition.replace(/:/g, '_');
}
