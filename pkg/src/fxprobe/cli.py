"""fxprobe command-line interface.

Subcommands: render, embed, train, eval, exp1, exp2, exp3, exp4, report,
fixture. Exit codes: 0 success, 2 validation error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from .audio import WavSpec, read_wav, write_wav
from .effects import FxKind, apply_chain, apply_fx, scenario_preset
from .embedding import (
    BUILTIN_MODEL_ID,
    Condition,
    ConditionEmbedder,
    ladder_conditions,
    load_embeddings,
    save_embeddings,
)
from .errors import FxProbeError, InvalidData
from .experiments import (
    build_configs,
    exp1_performance_impact,
    exp2_prediction_shifts,
    exp3_trajectories,
    exp4_scenarios,
    load_config_file,
    load_manifest,
)
from .experiments.io import write_exp1_outputs, write_exp2_outputs, write_trajectory_outputs
from .experiments.reports import DeltaTable
from .probes import evaluate, load_probe, train_classifier, train_multilabel, train_regressor
from .validation import check_array

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_IO = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fxprobe",
                                     description="Audit how audio FX move emotion estimates.")
    parser.add_argument("--config", help="YAML config file")
    parser.add_argument("--seed", type=int, default=None, help="master random seed (default 42)")
    parser.add_argument("--jobs", type=int, default=None, help="worker threads for rendering")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("render", help="apply one effect or a chain to a WAV file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--fx", help="effect kind (reverb/delay/distortion/eq/chorus/phaser)")
    p.add_argument("--level", type=int, help="intensity level 1..10")
    p.add_argument("--chain", help="scenario chain name (pink_floyd/u2/ratm)")
    p.add_argument("--encoding", default="float32", choices=("float32", "pcm16"))

    p = sub.add_parser("embed", help="compute or validate embeddings")
    p.add_argument("--manifest")
    p.add_argument("--out")
    p.add_argument("--conditions", help="comma-separated condition list")
    p.add_argument("--fx", help="comma-separated effect kinds for a ladder")
    p.add_argument("--levels", help="comma-separated levels (default 1..10)")
    p.add_argument("--audio-root", help="base dir for manifest audio paths")
    p.add_argument("--validate", help="parse an exchange file and report")

    p = sub.add_parser("train", help="train a probe on clean train-split embeddings")
    p.add_argument("--manifest", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--embeddings", help="external exchange file (default: builtin embedder)")
    p.add_argument("--audio-root")

    p = sub.add_parser("eval", help="evaluate a saved probe under a condition")
    p.add_argument("--manifest", required=True)
    p.add_argument("--probe", required=True)
    p.add_argument("--target", help="va_regression target (valence/arousal)")
    p.add_argument("--condition", default="clean")
    p.add_argument("--embeddings")
    p.add_argument("--audio-root")

    for name, help_text in (
        ("exp1", "performance impact deltas"),
        ("exp2", "prediction shift radar data"),
        ("exp3", "intensity-ladder trajectories"),
        ("exp4", "real-world chain trajectories"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--manifest", required=True)
        p.add_argument("--outdir", required=True)
        p.add_argument("--embeddings", help="external exchange file (default: builtin)")
        p.add_argument("--audio-root")
        p.add_argument("--fx", help="comma-separated effect kinds")
        p.add_argument("--levels", help="comma-separated levels")
        if name == "exp2":
            p.add_argument("--use-sample", action="store_true",
                           help="count over the per-label sample instead of the full test split")
        if name in ("exp3", "exp4"):
            p.add_argument("--projection", choices=("neighbor_embed", "pca"))
        if name == "exp4":
            p.add_argument("--scenarios", help="comma-separated scenario names")

    p = sub.add_parser("report", help="round-trip check tables and render SVG plots")
    p.add_argument("--outdir", required=True)
    p.add_argument("--plots", action="store_true")

    p = sub.add_parser("fixture", help="generate the bundled synthetic fixtures")
    p.add_argument("--outdir", required=True)
    p.add_argument("--tracks", type=int, default=50)
    p.add_argument("--kind", default="full", choices=("full", "two_class", "sine"))
    return parser


def _parse_fx_list(text: str | None, default):
    if not text:
        return default
    return tuple(FxKind.parse(tok) for tok in text.split(",") if tok.strip())


def _parse_levels(text: str | None, default):
    if not text:
        return default
    return tuple(int(tok) for tok in text.split(",") if tok.strip())


def _embedder_for(args, manifest, jobs: int) -> ConditionEmbedder:
    audio_root = Path(args.audio_root) if args.audio_root else Path(args.manifest).parent
    model = BUILTIN_MODEL_ID
    if getattr(args, "embeddings", None):
        model = load_embeddings(args.embeddings)
    return ConditionEmbedder(manifest, model, audio_root=audio_root, jobs=jobs)


def _cmd_render(args) -> int:
    buf = read_wav(args.infile)
    if args.chain:
        out = apply_chain(buf, scenario_preset(args.chain))
    elif args.fx and args.level is not None:
        out = apply_fx(buf, FxKind.parse(args.fx), args.level)
    else:
        raise InvalidData("render needs either --chain or both --fx and --level")
    write_wav(out, WavSpec(args.encoding, out.sample_rate, out.channels), args.out)
    print(f"wrote {args.out}")
    return EXIT_OK


def _cmd_embed(args, run_cfg) -> int:
    if args.validate:
        embeddings = load_embeddings(args.validate)
        print(
            f"ok: model={embeddings.model_id} dim={embeddings.dimension} records={len(embeddings)}"
        )
        return EXIT_OK
    if not args.manifest or not args.out:
        raise InvalidData("embed needs --manifest and --out (or --validate)")
    manifest = load_manifest(args.manifest)
    if args.conditions:
        conditions = [Condition.parse(tok) for tok in args.conditions.split(",") if tok.strip()]
    else:
        fx = _parse_fx_list(args.fx, run_cfg.fx)
        levels = _parse_levels(args.levels, run_cfg.levels)
        conditions = ladder_conditions(fx, levels)
    embedder = _embedder_for(args, manifest, run_cfg.jobs)
    result = embedder.embed(manifest.track_ids, conditions)
    save_embeddings(result, args.out)
    print(f"wrote {args.out} ({len(result)} records)")
    return EXIT_OK


def _train_for_manifest(manifest, embedder, probe_cfg):
    rows = manifest.split_rows("train")
    X = np.stack([embedder.vector(r.track_id, Condition.clean()) for r in rows])
    if manifest.task == "va_regression":
        return {
            t: train_regressor(X, np.array([r.labels[t] for r in rows]), probe_cfg)
            for t in ("valence", "arousal")
        }
    if manifest.task == "four_class":
        return {"label": train_classifier(X, [r.labels["label"] for r in rows], probe_cfg)}
    Y = np.array([[r.labels[tag] for tag in manifest.label_columns] for r in rows])
    return {"tags": train_multilabel(X, Y, probe_cfg, label_names=list(manifest.label_columns))}


def _cmd_train(args, run_cfg, probe_cfg) -> int:
    from .probes import save_probe

    manifest = load_manifest(args.manifest)
    embedder = _embedder_for(args, manifest, run_cfg.jobs)
    probes = _train_for_manifest(manifest, embedder, probe_cfg)
    out = Path(args.out)
    if len(probes) == 1:
        target, probe = next(iter(probes.items()))
        out.parent.mkdir(parents=True, exist_ok=True)
        save_probe(probe, out)
        print(f"wrote {out} (target {target})")
    else:
        out.mkdir(parents=True, exist_ok=True)
        for target, probe in sorted(probes.items()):
            path = out / f"probe_{target}.txt"
            save_probe(probe, path)
            print(f"wrote {path}")
    return EXIT_OK


def _cmd_eval(args, run_cfg) -> int:
    manifest = load_manifest(args.manifest)
    embedder = _embedder_for(args, manifest, run_cfg.jobs)
    probe = load_probe(args.probe)
    condition = Condition.parse(args.condition)
    rows = manifest.split_rows("test")
    if not rows:
        raise InvalidData("manifest has no test rows")
    X = np.stack([embedder.vector(r.track_id, condition) for r in rows])
    check_array(X)
    if probe.task == "regression":
        target = args.target or "valence"
        truth = np.array([r.labels[target] for r in rows])
    elif probe.task == "single_label":
        truth = [r.labels["label"] for r in rows]
    else:
        truth = np.array([[r.labels[tag] for tag in manifest.label_columns] for r in rows])
    report = evaluate(probe, X, truth)
    for name, value in sorted(report.flat().items()):
        print(f"{args.condition}\t{name}\t{value!r}")
    return EXIT_OK


def _cmd_exp(args, name, run_cfg, probe_cfg, pipe_cfg, proj_cfg) -> int:
    from dataclasses import replace

    manifest = load_manifest(args.manifest)
    run_cfg = replace(
        run_cfg,
        fx=_parse_fx_list(getattr(args, "fx", None), run_cfg.fx),
        levels=_parse_levels(getattr(args, "levels", None), run_cfg.levels),
    )
    if getattr(args, "scenarios", None):
        run_cfg = replace(run_cfg, scenarios=tuple(args.scenarios.split(",")))
    if getattr(args, "use_sample", False):
        run_cfg = replace(run_cfg, use_sample_for_shifts=True)
    if getattr(args, "projection", None):
        proj_cfg = replace(proj_cfg, method=args.projection)
    embedder = _embedder_for(args, manifest, run_cfg.jobs)
    outdir = Path(args.outdir) / name

    if name == "exp1":
        result = exp1_performance_impact(manifest, embedder, run_cfg, probe_cfg)
        written = write_exp1_outputs(result, outdir)
    elif name == "exp2":
        radar = exp2_prediction_shifts(manifest, embedder, run_cfg, probe_cfg)
        written = write_exp2_outputs(radar, outdir)
    elif name == "exp3":
        results = exp3_trajectories(manifest, embedder, run_cfg, pipe_cfg, proj_cfg)
        written = write_trajectory_outputs(results, outdir)
    else:
        results = exp4_scenarios(manifest, embedder, run_cfg, pipe_cfg, proj_cfg)
        written = write_trajectory_outputs(results, outdir)
    for path in written:
        print(f"wrote {path}")
    return EXIT_OK


def _cmd_report(args) -> int:
    outdir = Path(args.outdir)
    delta_path = outdir / "exp1" / "delta_table.csv"
    if delta_path.exists():
        table = DeltaTable.from_text(delta_path.read_text(encoding="utf-8"))
        round_trip = table.to_text() == delta_path.read_text(encoding="utf-8")
        print(f"delta table: {len(table.cells)} cells, round-trip {'ok' if round_trip else 'FAILED'}")
        if args.plots:
            from .experiments import plots

            for path in plots.plot_delta_table(table, outdir / "plots"):
                print(f"wrote {path}")
    if args.plots:
        radar_path = outdir / "exp2" / "radar.csv"
        if radar_path.exists():
            print(f"radar table present: {radar_path}")
    print("report complete")
    return EXIT_OK


def _cmd_fixture(args, run_cfg) -> int:
    from . import fixtures

    seed = run_cfg.seed
    if args.kind == "full":
        paths = fixtures.make_synthetic_fixture(args.outdir, n_tracks=args.tracks, seed=seed)
        for name, path in sorted(paths.items()):
            print(f"{name}: {path}")
    elif args.kind == "two_class":
        print(fixtures.make_two_class_energy_fixture(args.outdir, seed=seed))
    else:
        print(fixtures.make_sine_fixture(args.outdir, seed=seed))
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    config_data = load_config_file(args.config) if args.config else {}
    try:
        run_cfg, probe_cfg, pipe_cfg, proj_cfg = build_configs(config_data, args.seed, args.jobs)
        if args.command == "render":
            return _cmd_render(args)
        if args.command == "embed":
            return _cmd_embed(args, run_cfg)
        if args.command == "train":
            return _cmd_train(args, run_cfg, probe_cfg)
        if args.command == "eval":
            return _cmd_eval(args, run_cfg)
        if args.command in ("exp1", "exp2", "exp3", "exp4"):
            return _cmd_exp(args, args.command, run_cfg, probe_cfg, pipe_cfg, proj_cfg)
        if args.command == "report":
            return _cmd_report(args)
        if args.command == "fixture":
            return _cmd_fixture(args, run_cfg)
        raise InvalidData(f"unknown command {args.command}")
    except FxProbeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
