import numpy as np
import pytest

from fxprobe.audio import read_wav, synth_signal, spec_for, write_wav
from fxprobe.cli import EXIT_IO, EXIT_OK, EXIT_VALIDATION, main
from fxprobe.embedding import load_embeddings


@pytest.fixture(scope="module")
def wav_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("cliwav") / "in.wav"
    buf = synth_signal("sine", 1.5, 32000, freq=440.0)
    write_wav(buf, spec_for(buf), path)
    return path


class TestRender:
    def test_single_effect(self, wav_file, tmp_path):
        out = tmp_path / "out.wav"
        code = main(["render", "--in", str(wav_file), "--fx", "distortion",
                     "--level", "7", "--out", str(out)])
        assert code == EXIT_OK
        rendered = read_wav(out)
        assert rendered.frames == read_wav(wav_file).frames

    def test_chain(self, wav_file, tmp_path):
        out = tmp_path / "chain.wav"
        code = main(["render", "--in", str(wav_file), "--chain", "pink_floyd",
                     "--out", str(out)])
        assert code == EXIT_OK

    def test_unknown_chain_exit_2(self, wav_file, tmp_path):
        code = main(["render", "--in", str(wav_file), "--chain", "queen",
                     "--out", str(tmp_path / "x.wav")])
        assert code == EXIT_VALIDATION

    def test_bad_level_exit_2(self, wav_file, tmp_path):
        code = main(["render", "--in", str(wav_file), "--fx", "distortion",
                     "--level", "11", "--out", str(tmp_path / "x.wav")])
        assert code == EXIT_VALIDATION

    def test_missing_input_exit_3(self, tmp_path):
        code = main(["render", "--in", str(tmp_path / "absent.wav"), "--fx",
                     "distortion", "--level", "3", "--out", str(tmp_path / "x.wav")])
        assert code == EXIT_IO


class TestEmbed:
    def test_embed_and_validate(self, fixture_small, tmp_path):
        out = tmp_path / "e.fxemb"
        code = main(["embed", "--manifest", str(fixture_small["regression"]),
                     "--out", str(out), "--conditions", "clean,fx:distortion:3"])
        assert code == EXIT_OK
        loaded = load_embeddings(out)
        assert len(loaded) == 2 * 16
        assert main(["embed", "--validate", str(out)]) == EXIT_OK

    def test_validate_rejects_garbage(self, tmp_path):
        bad = tmp_path / "bad.fxemb"
        bad.write_text("not a header\n")
        assert main(["embed", "--validate", str(bad)]) == EXIT_VALIDATION


class TestTrainEval:
    def test_train_then_eval(self, fixture_small, tmp_path, capsys):
        out = tmp_path / "probes"
        code = main(["train", "--manifest", str(fixture_small["regression"]),
                     "--out", str(out)])
        assert code == EXIT_OK
        probe_path = out / "probe_valence.txt"
        assert probe_path.exists()
        code = main(["eval", "--manifest", str(fixture_small["regression"]),
                     "--probe", str(probe_path), "--target", "valence"])
        assert code == EXIT_OK
        lines = capsys.readouterr().out.strip().splitlines()
        assert any("mse" in line for line in lines)

    def test_eval_under_condition(self, fixture_small, tmp_path, capsys):
        out = tmp_path / "probes2"
        main(["train", "--manifest", str(fixture_small["four_class"]), "--out", str(out / "clf.txt")])
        code = main(["eval", "--manifest", str(fixture_small["four_class"]),
                     "--probe", str(out / "clf.txt"), "--condition", "fx:reverb:5"])
        assert code == EXIT_OK


class TestExpCommands:
    def test_exp1_writes_reports(self, fixture_small, tmp_path):
        outdir = tmp_path / "run"
        code = main(["exp1", "--manifest", str(fixture_small["regression"]),
                     "--outdir", str(outdir), "--fx", "distortion", "--levels",
                     "1,10"])
        assert code == EXIT_OK
        assert (outdir / "exp1" / "delta_table.csv").exists()
        assert (outdir / "exp1" / "metrics_long.csv").exists()

    def test_report_round_trip(self, fixture_small, tmp_path, capsys):
        outdir = tmp_path / "run2"
        main(["exp1", "--manifest", str(fixture_small["regression"]),
              "--outdir", str(outdir), "--fx", "eq", "--levels", "1,10"])
        code = main(["report", "--outdir", str(outdir)])
        assert code == EXIT_OK
        assert "round-trip ok" in capsys.readouterr().out

    def test_exp2_needs_classification(self, fixture_small, tmp_path):
        code = main(["exp2", "--manifest", str(fixture_small["regression"]),
                     "--outdir", str(tmp_path / "r")])
        assert code == EXIT_VALIDATION

    def test_manifest_errors_exit_2(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("#fxmanifest v1 task=nope dataset=x\ntrack_id,audio_path,split,label\n")
        code = main(["exp1", "--manifest", str(bad), "--outdir", str(tmp_path / "o")])
        assert code == EXIT_VALIDATION


class TestFixtureCommand:
    def test_fixture_generation(self, tmp_path):
        code = main(["fixture", "--outdir", str(tmp_path / "fx"), "--tracks", "6"])
        assert code == EXIT_OK
        assert (tmp_path / "fx" / "regression.csv").exists()

    def test_config_file_controls_run(self, fixture_small, tmp_path):
        config = tmp_path / "cfg.yaml"
        config.write_text("fx: [distortion]\nlevels: [1, 10]\nseed: 42\n")
        outdir = tmp_path / "cfgrun"
        code = main(["--config", str(config), "exp1",
                     "--manifest", str(fixture_small["regression"]),
                     "--outdir", str(outdir)])
        assert code == EXIT_OK
        text = (outdir / "exp1" / "metrics_long.csv").read_text()
        assert "reverb" not in text
