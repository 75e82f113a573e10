"""Acceptance suite: one test per criterion, each reporting a PASS/FAIL line
(printed in the terminal summary; run with `pytest tests/test_acceptance.py`).
"""

import time
import warnings

import numpy as np
import pytest
from scipy.stats import spearmanr

from conftest import record_criterion
from fxprobe.audio import AudioBuffer, read_wav, synth_signal
from fxprobe.cli import EXIT_OK, main
from fxprobe.effects import (
    Delay,
    Distortion,
    Eq,
    FxKind,
    apply_delay,
    apply_distortion,
    apply_eq,
    apply_fx,
    apply_settings,
    intensity_to_settings,
    scenario_preset,
)
from fxprobe.embedding import Condition, ConditionEmbedder, embed_builtin
from fxprobe.experiments import RunConfig, exp1_performance_impact, exp3_trajectories, load_manifest
from fxprobe.experiments.reports import DeltaTable
from fxprobe.experiments.runner import _fit_selection
from fxprobe.experiments.sampling import sample_tracks
from fxprobe.pipeline import (
    CorrelationPruner,
    PipelineConfig,
    Standardizer,
    VarianceThreshold,
    coordinate_descent,
    population_variance,
)
from fxprobe.probes import (
    TreeBoostClassifier,
    TreeBoostRegressor,
    classification_metrics,
    multilabel_metrics,
    regression_metrics,
)
from fxprobe.projection import (
    ProjectionConfig,
    cosine_distances,
    fuzzy_graph,
    knn_graph,
    pca_coords,
    project,
    spectral_init,
    trajectory_metrics,
)
from test_pipeline import brute_force_prune
from test_probes import oracle_classification, oracle_multilabel, oracle_regression
from test_projection import trustworthiness_oracle

_QUALITATIVE_SECONDS: dict[str, float] = {}


# ----------------------------------------------------------------- DSP suite
def test_dsp_suite():
    name = "DSP suite: silence/finiteness/determinism per fx x level, echo, tanh, EQ, < 30 s"
    started = time.perf_counter()

    silence = synth_signal("silence", 0.2, 44100)
    noise = synth_signal("white_noise", 0.2, 44100, seed=5)
    for kind in FxKind:
        for level in range(1, 11):
            out = apply_fx(silence, kind, level)
            assert np.abs(out.samples).max() == 0.0, (kind, level)
            a = apply_fx(noise, kind, level)
            b = apply_fx(noise, kind, level)
            assert np.all(np.isfinite(a.samples)), (kind, level)
            assert np.array_equal(a.samples, b.samples), (kind, level)

    imp = synth_signal("impulse", 0.75, 8000)
    for level in range(1, 11):
        s = intensity_to_settings(FxKind.DELAY, level)
        expected = round(s.delay_seconds * 8000)
        y = np.abs(apply_delay(imp, s).samples[0]).copy()
        y[0] = 0.0
        assert int(np.argmax(y > 1e-6)) == expected, level

    half = AudioBuffer(44100, np.array([0.5], dtype=np.float32))
    out = apply_distortion(half, Distortion(20.0))
    assert abs(float(out.samples[0, 0]) - np.tanh(5.0)) < 1e-6

    const = AudioBuffer(44100, np.full(44100, 0.5, dtype=np.float32))
    out = apply_eq(const, Eq(20.0, 14800.0))
    assert abs(float(out.samples[0, -1])) < 1e-3

    elapsed = time.perf_counter() - started
    assert elapsed < 30.0, f"DSP suite took {elapsed:.1f}s"
    record_criterion(name, True)


# --------------------------------------------------------------- probe suite
def test_probe_suite():
    name = "Probe suite: loss monotone per tree, metric oracles to 1e-12, blob F1 >= 0.95"
    rng = np.random.default_rng(42)

    X = rng.normal(size=(500, 8))
    y = 2.0 * X[:, 0] - X[:, 3] + 0.1 * rng.normal(size=500)
    model = TreeBoostRegressor().fit(X, y)
    path = model.train_loss_path_
    assert all(b <= a + 1e-12 for a, b in zip(path, path[1:]))

    report = regression_metrics([0.0, 1.0], [0.5, 0.5])
    assert report["mse"] == 0.25 and report["r2"] == 0.0
    for _ in range(40):
        n = int(rng.integers(2, 11))
        yt, yp = rng.normal(size=n), rng.normal(size=n)
        ref = oracle_regression(list(yt), list(yp))
        mine = regression_metrics(yt, yp)
        assert all(abs(mine[k] - ref[k]) < 1e-12 for k in ref)
        classes = ["A", "B", "C"]
        ct = [classes[i] for i in rng.integers(0, 3, size=n)]
        cp = [classes[i] for i in rng.integers(0, 3, size=n)]
        ref = oracle_classification(ct, cp, classes)
        mine = classification_metrics(ct, cp, classes)
        assert all(abs(mine[k] - ref[k]) < 1e-12 for k in ref)
        Yt = rng.integers(0, 2, size=(n, 3))
        Yp = rng.integers(0, 2, size=(n, 3))
        ref = oracle_multilabel(Yt.tolist(), Yp.tolist())
        mine = multilabel_metrics(Yt, Yp)
        assert all(abs(mine[k] - ref[k]) < 1e-12 for k in ref)

    Xa = rng.normal(loc=0.0, size=(40, 3))
    Xb = rng.normal(loc=4.0, size=(40, 3))
    Xc = np.vstack([Xa, Xb])
    yc = np.array(["neg"] * 40 + ["pos"] * 40)
    clf = TreeBoostClassifier().fit(Xc, yc)
    assert classification_metrics(yc, clf.predict(Xc), clf.classes_)["f1"] >= 0.95
    record_criterion(name, True)


# ------------------------------------------------------------ pipeline suite
def test_feature_pipeline_suite():
    name = "Feature-pipeline suite: standardize, stage oracles, soft-threshold 0.904762, CD monotone"
    rng = np.random.default_rng(42)

    out = Standardizer().fit_transform(np.array([[1.0], [2.0], [3.0]]))
    assert np.allclose(out.ravel(), [-1.2247, 0.0, 1.2247], atol=1e-4)

    for _ in range(20):
        n_cols = int(rng.integers(1, 6))
        X = rng.normal(size=(20, n_cols))
        if n_cols >= 2 and rng.random() < 0.6:
            X[:, 1] = X[:, 0] + 0.01 * rng.normal(size=20)
        if rng.random() < 0.3:
            X[:, -1] = 7.7
        variances = population_variance(X)
        mask = VarianceThreshold(1e-6).fit(X).mask_
        assert mask.kept_indices == tuple(
            j for j in range(n_cols) if variances[j] >= 1e-6
        )
        survivors = mask.apply(X)
        if survivors.shape[1] >= 1:
            pruned = CorrelationPruner(0.95).fit(survivors).mask_
            assert pruned.kept_indices == brute_force_prune(survivors, 0.95)

    x = rng.normal(size=200)
    x = (x - x.mean()) / x.std()
    beta, trace = coordinate_descent(x[:, None], x.copy(), alpha=0.1, l1_ratio=0.5)
    assert abs(beta[0] - 0.904762) < 1e-4
    assert all(b <= a + 1e-10 for a, b in zip(trace, trace[1:]))

    X = rng.normal(size=(60, 6))
    y = X[:, 1] - 0.5 * X[:, 4] + 0.05 * rng.normal(size=60)
    _, trace = coordinate_descent(X, y, 0.05, 0.8, tol=1e-10, max_iter=400)
    assert all(b <= a + 1e-10 for a, b in zip(trace, trace[1:]))
    record_criterion(name, True)


# ---------------------------------------------------------- projection suite
def test_projection_suite():
    name = "Projection suite: kNN oracle, epochs-0 init exact, trajectory hand values, trustworthiness >= 0.8"
    rng = np.random.default_rng(42)

    X = rng.normal(size=(100, 6))
    idx, _ = knn_graph(X, 12)
    D = cosine_distances(X)
    for i in range(100):
        others = [j for j in range(100) if j != i]
        expected = sorted(others, key=lambda j: (D[i, j], j))[:12]
        assert list(idx[i]) == expected

    small = rng.normal(size=(40, 5))
    out = project(small, ProjectionConfig(n_epochs=0, n_neighbors=8))
    init = spectral_init(fuzzy_graph(*knn_graph(small, 8)))
    assert np.array_equal(out, init)

    m = trajectory_metrics([(0.0, 0.0), (3.0, 4.0)])
    assert m["length"] == 5.0 and m["straightness"] == 1.0
    m = trajectory_metrics([(0.0, 0.0), (1.0, 0.0), (0.0, 0.0)])
    assert m["length"] == 2.0 and m["net_displacement"] == 0.0 and m["straightness"] == 0.0

    cluster_rng = np.random.default_rng(42)
    A = cluster_rng.normal(loc=0.0, size=(50, 10))
    B = cluster_rng.normal(loc=6.0, size=(50, 10))
    XC = np.vstack([A, B])
    E = project(XC, ProjectionConfig(seed=42))
    assert trustworthiness_oracle(XC, E, 10) >= 0.8
    record_criterion(name, True)


# ------------------------------------------------- qualitative paper-direction
def test_qualitative_a_distortion_mse_delta(fixture_50):
    name = "Qualitative (a): clean-trained probe, distortion MSE delta L10-L1 > 0 for both targets"
    started = time.perf_counter()
    manifest = load_manifest(fixture_50["regression"])
    embedder = ConditionEmbedder(manifest, audio_root=fixture_50["root"])
    cfg = RunConfig(seed=42, fx=(FxKind.DISTORTION,))
    result = exp1_performance_impact(manifest, embedder, cfg)
    for target in ("valence", "arousal"):
        delta = result.delta_table.cells[("synth_va", "builtin", "distortion", f"mse_{target}")]
        assert delta > 0.0, f"mse_{target} delta {delta}"
    _QUALITATIVE_SECONDS["a"] = time.perf_counter() - started
    record_criterion(name, True)


def test_qualitative_b_trajectory_direction(fixture_sine):
    name = "Qualitative (b): distortion trajectory length > zero-motion baseline, Spearman >= 0.9"
    started = time.perf_counter()
    manifest = load_manifest(fixture_sine["manifest"])
    embedder = ConditionEmbedder(manifest, audio_root=fixture_sine["root"])
    cfg = RunConfig(seed=42, fx=(FxKind.DISTORTION,))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        results = exp3_trajectories(manifest, embedder, cfg, PipelineConfig(),
                                    ProjectionConfig(method="pca"))
    trajectories = results["valence"].trajectory_set.trajectories

    # zero-motion baseline: a track that never moves has length exactly 0
    baseline = trajectory_metrics(np.zeros((11, 2)))["length"]
    assert baseline == 0.0
    mean_length = float(np.mean([t.metrics["length"] for t in trajectories]))
    assert mean_length > baseline

    rhos = []
    for t in trajectories:
        distances = np.sqrt(((t.points[1:] - t.points[0]) ** 2).sum(axis=1))
        rhos.append(spearmanr(range(1, 11), distances).statistic)
    assert float(np.mean(rhos)) >= 0.9
    _QUALITATIVE_SECONDS["b"] = time.perf_counter() - started
    record_criterion(name, True)


def test_qualitative_c_chains_vs_single_stages(fixture_50):
    name = "Qualitative (c): full-chain mean trajectory length >= best single-stage mean length"
    started = time.perf_counter()
    manifest = load_manifest(fixture_50["regression"])
    embedder = ConditionEmbedder(manifest, audio_root=fixture_50["root"])
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        pipeline = _fit_selection(manifest, embedder, "valence", PipelineConfig())

    for scenario in ("pink_floyd", "u2", "ratm"):
        chain = scenario_preset(scenario)
        tracks = sample_tracks(manifest, scenario, 42)
        vectors, keys = [], []
        for track in tracks:
            buf = read_wav(manifest.audio_path_for(track, fixture_50["root"]))
            vectors.append(embedder.vector(track, Condition.clean()))
            keys.append((track, "clean"))
            for k in range(1, len(chain) + 1):
                vectors.append(embedder.vector(track, Condition.chainstage(scenario, k)))
                keys.append((track, f"stage{k}"))
            for k, stage in enumerate(chain.stages, 1):
                vectors.append(embed_builtin(apply_settings(buf, stage)))
                keys.append((track, f"solo{k}"))
        coords = pca_coords(pipeline.transform(np.stack(vectors)))
        lookup = {key: coords[i] for i, key in enumerate(keys)}

        chain_lengths, solo_means = [], []
        for k in range(1, len(chain) + 1):
            solo_means.append(
                float(np.mean([
                    np.linalg.norm(lookup[(t, f"solo{k}")] - lookup[(t, "clean")])
                    for t in tracks
                ]))
            )
        for t in tracks:
            pts = np.array(
                [lookup[(t, "clean")]]
                + [lookup[(t, f"stage{k}")] for k in range(1, len(chain) + 1)]
            )
            chain_lengths.append(trajectory_metrics(pts)["length"])
        assert float(np.mean(chain_lengths)) >= max(solo_means), scenario
    _QUALITATIVE_SECONDS["c"] = time.perf_counter() - started
    record_criterion(name, True)


def test_qualitative_runtime_budget():
    name = "Qualitative (a)-(c) total runtime < 5 min"
    total = sum(_QUALITATIVE_SECONDS.values())
    assert set(_QUALITATIVE_SECONDS) == {"a", "b", "c"}
    assert total < 300.0, f"qualitative trio took {total:.1f}s"
    record_criterion(f"{name} ({total:.1f}s)", True)


# ------------------------------------------------------------ reproducibility
def _run_all_experiments(fixture, outdir, jobs: int) -> None:
    regression = str(fixture["regression"])
    four_class = str(fixture["four_class"])
    base = ["--seed", "42", "--jobs", str(jobs)]
    fx = "distortion,chorus"
    assert main(base + ["exp1", "--manifest", regression, "--outdir", str(outdir), "--fx", fx]) == EXIT_OK
    assert main(base + ["exp2", "--manifest", four_class, "--outdir", str(outdir), "--fx", fx]) == EXIT_OK
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        assert main(base + ["exp3", "--manifest", regression, "--outdir", str(outdir), "--fx", fx]) == EXIT_OK
        assert main(base + ["exp4", "--manifest", regression, "--outdir", str(outdir)]) == EXIT_OK


@pytest.fixture(scope="module")
def reproducibility_runs(fixture_50, tmp_path_factory):
    root = tmp_path_factory.mktemp("repro")
    dirs = {"a": root / "a", "b": root / "b", "jobs8": root / "jobs8"}
    _run_all_experiments(fixture_50, dirs["a"], jobs=1)
    _run_all_experiments(fixture_50, dirs["b"], jobs=1)
    _run_all_experiments(fixture_50, dirs["jobs8"], jobs=8)
    return dirs


def test_reproducibility_byte_identical(reproducibility_runs):
    name = "Reproducibility: exp1-exp4 byte-identical across two runs and --jobs 1 vs 8"
    dirs = reproducibility_runs
    files = sorted(p.relative_to(dirs["a"]) for p in dirs["a"].rglob("*") if p.is_file())
    assert files, "no report files written"
    for rel in files:
        reference = (dirs["a"] / rel).read_bytes()
        assert (dirs["b"] / rel).read_bytes() == reference, f"run-to-run diff in {rel}"
        assert (dirs["jobs8"] / rel).read_bytes() == reference, f"jobs diff in {rel}"
    record_criterion(f"{name} ({len(files)} files)", True)


# --------------------------------------------------------- report conventions
def test_report_conventions(reproducibility_runs):
    name = "Report conventions: one bold per (dataset,model,metric), one underline per (dataset,fx,metric), radar max 1"
    table = DeltaTable.from_text(
        (reproducibility_runs["a"] / "exp1" / "delta_table.csv").read_text()
    )
    bold_groups: dict = {}
    underline_groups: dict = {}
    for dataset, model, fx, metric in table.cells:
        bold_groups.setdefault((dataset, model, metric), 0)
        underline_groups.setdefault((dataset, fx, metric), 0)
    for dataset, model, fx, metric in table.bold:
        bold_groups[(dataset, model, metric)] += 1
    for dataset, model, fx, metric in table.underline:
        underline_groups[(dataset, fx, metric)] += 1
    assert all(v == 1 for v in bold_groups.values())
    assert all(v == 1 for v in underline_groups.values())

    radar_lines = (reproducibility_runs["a"] / "exp2" / "radar.csv").read_text().splitlines()[1:]
    plots: dict = {}
    for line in radar_lines:
        dataset, model, fx, level, label, count, normalized = line.split(",")
        key = (model, fx)
        plots.setdefault(key, []).append((int(count), float(normalized)))
    for key, entries in plots.items():
        if any(c > 0 for c, _ in entries):
            assert max(n for _, n in entries) == 1.0, key
    record_criterion(name, True)
