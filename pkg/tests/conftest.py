"""Shared fixtures: synthetic datasets are generated once per session."""

from __future__ import annotations

import numpy as np
import pytest

from fxprobe.audio import synth_signal
from fxprobe.fixtures import (
    make_sine_fixture,
    make_synthetic_fixture,
    make_two_class_energy_fixture,
)

_ACCEPTANCE_LINES: list[str] = []


def record_criterion(name: str, passed: bool) -> None:
    _ACCEPTANCE_LINES.append(f"{'PASS' if passed else 'FAIL'}: {name}")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def fixture_50(tmp_path_factory):
    root = tmp_path_factory.mktemp("fixture50")
    paths = make_synthetic_fixture(root, n_tracks=50, seed=42)
    paths["root"] = root
    return paths


@pytest.fixture(scope="session")
def fixture_two_class(tmp_path_factory):
    root = tmp_path_factory.mktemp("fixture2c")
    manifest = make_two_class_energy_fixture(root, n_tracks=24, seed=7)
    return {"root": root, "manifest": manifest}


@pytest.fixture(scope="session")
def fixture_sine(tmp_path_factory):
    root = tmp_path_factory.mktemp("fixturesine")
    manifest = make_sine_fixture(root, n_tracks=12, seed=3)
    return {"root": root, "manifest": manifest}


@pytest.fixture(scope="session")
def fixture_small(tmp_path_factory):
    """16 tracks: enough for the cheaper end-to-end checks."""
    root = tmp_path_factory.mktemp("fixture16")
    paths = make_synthetic_fixture(root, n_tracks=16, seed=11)
    paths["root"] = root
    return paths


@pytest.fixture(scope="session")
def sine_440():
    return synth_signal("sine", 1.0, 16000, freq=440.0)


@pytest.fixture(scope="session")
def impulse_44k():
    return synth_signal("impulse", 0.5, 44100)


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(0)
