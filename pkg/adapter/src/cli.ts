#!/usr/bin/env node
/**
 * fxemb-adapter extract --manifest <csv> --model mert|clap|qwen --out <file>
 *   [--conditions clean,fx:distortion:5,...] [--renders <dir>]
 *   [--render-cli fxprobe] [--backend deterministic|transformers]
 *   [--pooling mean-over-time|final-layer]
 */

import { dirname, resolve } from 'node:path';
import process from 'node:process';

import { AdapterError } from './errors.js';
import { extract } from './extract.js';
import { loadManifest } from './manifest.js';
import { resolveModel, type AdapterConfig, type Pooling } from './models.js';

function parseArgs(argv: string[]): Map<string, string> {
  const out = new Map<string, string>();
  for (let i = 0; i < argv.length; i++) {
    const arg = argv[i];
    if (arg.startsWith('--')) {
      const value = argv[i + 1];
      if (value === undefined || value.startsWith('--')) {
        out.set(arg.slice(2), 'true');
      } else {
        out.set(arg.slice(2), value);
        i++;
      }
    }
  }
  return out;
}

function required(args: Map<string, string>, name: string): string {
  const value = args.get(name);
  if (!value) throw new AdapterError(`missing required --${name}`);
  return value;
}

async function main(): Promise<number> {
  const [command, ...rest] = process.argv.slice(2);
  if (command !== 'extract') {
    console.error('usage: fxemb-adapter extract --manifest <csv> --model <id> --out <file> [options]');
    return 2;
  }
  const args = parseArgs(rest);
  try {
    const manifestPath = resolve(required(args, 'manifest'));
    const manifest = loadManifest(manifestPath);
    const model = resolveModel(required(args, 'model'));
    const pooling = (args.get('pooling') ?? 'mean-over-time') as Pooling;
    if (pooling !== 'mean-over-time' && pooling !== 'final-layer') {
      throw new AdapterError(`unknown pooling '${pooling}'`);
    }
    const backend = args.get('backend') ?? 'deterministic';
    if (backend !== 'deterministic' && backend !== 'transformers') {
      throw new AdapterError(`unknown backend '${backend}'`);
    }
    const cfg: AdapterConfig = { model, pooling, backend };
    const conditions = (args.get('conditions') ?? 'clean').split(',').filter((c) => c.trim());
    const outPath = await extract({
      manifest,
      manifestDir: dirname(manifestPath),
      conditions,
      cfg,
      outPath: required(args, 'out'),
      rendersDir: args.get('renders'),
      renderCli: args.get('render-cli'),
    });
    console.log(`wrote ${outPath} (${manifest.tracks.length} tracks x ${conditions.length} conditions)`);
    return 0;
  } catch (err) {
    console.error(`error: ${err instanceof Error ? err.message : String(err)}`);
    return 2;
  }
}

main().then((code) => process.exit(code));
