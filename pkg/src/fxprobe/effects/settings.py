"""Effect parameter types, the 1..10 intensity ladder, and scenario presets."""

from __future__ import annotations

import math
from dataclasses import dataclass, fields
from enum import Enum

from ..errors import InvalidData, InvalidLevel, UnknownScenario


class FxKind(Enum):
    REVERB = "reverb"
    DELAY = "delay"
    DISTORTION = "distortion"
    EQ = "eq"
    CHORUS = "chorus"
    PHASER = "phaser"

    @classmethod
    def parse(cls, name: str) -> "FxKind":
        try:
            return cls(name.lower())
        except ValueError:
            raise InvalidData(f"unknown effect kind {name!r}") from None


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InvalidData(message)


def _finite(value: float, name: str) -> None:
    _require(math.isfinite(value), f"{name} must be finite, got {value}")


def _unit(value: float, name: str) -> None:
    _finite(value, name)
    _require(0.0 <= value <= 1.0, f"{name} must be in [0, 1], got {value}")


def _feedback(value: float, name: str = "feedback") -> None:
    _finite(value, name)
    _require(0.0 <= value < 1.0, f"{name} must be in [0, 1) for stability, got {value}")


@dataclass(frozen=True)
class Reverb:
    room_size: float
    damping: float = 0.5
    wet: float = 0.33
    dry: float = 1.0

    kind = FxKind.REVERB

    def __post_init__(self):
        _unit(self.room_size, "room_size")
        _unit(self.damping, "damping")
        _unit(self.wet, "wet")
        _unit(self.dry, "dry")


@dataclass(frozen=True)
class Delay:
    delay_seconds: float
    feedback: float
    mix: float = 0.5

    kind = FxKind.DELAY

    def __post_init__(self):
        _finite(self.delay_seconds, "delay_seconds")
        _require(self.delay_seconds > 0.0, f"delay_seconds must be positive, got {self.delay_seconds}")
        _feedback(self.feedback)
        _unit(self.mix, "mix")


@dataclass(frozen=True)
class Distortion:
    drive_db: float

    kind = FxKind.DISTORTION

    def __post_init__(self):
        _finite(self.drive_db, "drive_db")


@dataclass(frozen=True)
class Eq:
    low_cutoff: float
    high_cutoff: float

    kind = FxKind.EQ

    def __post_init__(self):
        _finite(self.low_cutoff, "low_cutoff")
        _finite(self.high_cutoff, "high_cutoff")
        _require(0.0 < self.low_cutoff < self.high_cutoff,
                 f"need 0 < low_cutoff < high_cutoff, got {self.low_cutoff}, {self.high_cutoff}")


@dataclass(frozen=True)
class Chorus:
    rate_hz: float
    depth: float
    centre_delay_ms: float = 7.0
    feedback: float = 0.0
    mix: float = 0.5

    kind = FxKind.CHORUS

    def __post_init__(self):
        _finite(self.rate_hz, "rate_hz")
        _require(self.rate_hz >= 0.0, f"rate_hz must be >= 0, got {self.rate_hz}")
        _unit(self.depth, "depth")
        _finite(self.centre_delay_ms, "centre_delay_ms")
        _require(self.centre_delay_ms > 0.0, f"centre_delay_ms must be positive, got {self.centre_delay_ms}")
        _feedback(self.feedback)
        _unit(self.mix, "mix")


@dataclass(frozen=True)
class Phaser:
    rate_hz: float
    depth: float
    centre_frequency_hz: float = 1300.0
    feedback: float = 0.0
    mix: float = 0.5

    kind = FxKind.PHASER

    def __post_init__(self):
        _finite(self.rate_hz, "rate_hz")
        _require(self.rate_hz >= 0.0, f"rate_hz must be >= 0, got {self.rate_hz}")
        _unit(self.depth, "depth")
        _finite(self.centre_frequency_hz, "centre_frequency_hz")
        _require(self.centre_frequency_hz > 0.0,
                 f"centre_frequency_hz must be positive, got {self.centre_frequency_hz}")
        _feedback(self.feedback)
        _unit(self.mix, "mix")


FxSettings = Reverb | Delay | Distortion | Eq | Chorus | Phaser

_SETTINGS_BY_KIND = {cls.kind: cls for cls in (Reverb, Delay, Distortion, Eq, Chorus, Phaser)}


@dataclass(frozen=True)
class FxChain:
    """Named, ordered list of effect stages; applied in list order."""

    name: str
    stages: tuple

    def __post_init__(self):
        stages = tuple(self.stages)
        if not stages:
            raise InvalidData("FxChain must have at least one stage")
        object.__setattr__(self, "stages", stages)

    def __len__(self) -> int:
        return len(self.stages)

    def prefix(self, n_stages: int) -> "FxChain":
        """Chain truncated to its first ``n_stages`` stages."""
        if not 1 <= n_stages <= len(self.stages):
            raise InvalidData(f"prefix length {n_stages} outside 1..{len(self.stages)}")
        return FxChain(self.name, self.stages[:n_stages])


def check_level(level: int) -> int:
    if not isinstance(level, (int,)) or isinstance(level, bool) or not 1 <= level <= 10:
        raise InvalidLevel(f"intensity level must be an integer in 1..10, got {level!r}")
    return level


def intensity_to_settings(kind: FxKind, level: int) -> FxSettings:
    """Map (effect, level) to concrete parameters.

    The ladder is linear in the level for every parameter that varies, so
    intensity monotonicity properties hold by construction. The constants
    below are frozen; changing them is a versioned decision.
    """
    lvl = check_level(level)
    if kind is FxKind.DISTORTION:
        return Distortion(drive_db=3.0 * lvl)
    if kind is FxKind.REVERB:
        return Reverb(room_size=lvl / 10.0, damping=0.5, wet=0.33 + 0.04 * lvl, dry=1.0 - 0.04 * lvl)
    if kind is FxKind.DELAY:
        return Delay(delay_seconds=0.05 * lvl, feedback=0.05 * lvl, mix=0.5)
    if kind is FxKind.EQ:
        return Eq(low_cutoff=20.0 * lvl, high_cutoff=16000.0 - 1200.0 * lvl)
    if kind is FxKind.CHORUS:
        return Chorus(rate_hz=0.25 + 0.15 * lvl, depth=0.08 * lvl, centre_delay_ms=7.0,
                      feedback=0.04 * lvl, mix=0.5)
    if kind is FxKind.PHASER:
        return Phaser(rate_hz=0.2 + 0.18 * lvl, depth=0.09 * lvl, centre_frequency_hz=1300.0,
                      feedback=0.05 * lvl, mix=0.5)
    raise InvalidData(f"unhandled effect kind {kind}")


_SCENARIOS = {
    "pink_floyd": lambda: FxChain("pink_floyd", (
        Delay(delay_seconds=0.38, feedback=0.35, mix=0.4),
        Reverb(room_size=0.8, wet=0.5, dry=0.6),
    )),
    "u2": lambda: FxChain("u2", (
        Delay(delay_seconds=0.34, feedback=0.45, mix=0.45),
        Reverb(room_size=0.6, wet=0.4, dry=0.7),
    )),
    "ratm": lambda: FxChain("ratm", (
        Distortion(drive_db=27.0),
        Chorus(rate_hz=0.8, depth=0.25, centre_delay_ms=7.0, feedback=0.2, mix=0.3),
    )),
}

SCENARIO_NAMES = tuple(sorted(_SCENARIOS))


def scenario_preset(name: str) -> FxChain:
    """Frozen real-world chain presets (atmospheric delay+reverb, heavy drive+chorus)."""
    try:
        factory = _SCENARIOS[name]
    except KeyError:
        raise UnknownScenario(f"unknown scenario {name!r}; known: {', '.join(SCENARIO_NAMES)}") from None
    return factory()


def settings_to_dict(settings: FxSettings) -> dict:
    d = {"kind": settings.kind.value}
    d.update({f.name: getattr(settings, f.name) for f in fields(settings)})
    return d


def settings_from_dict(d: dict) -> FxSettings:
    payload = dict(d)
    kind = FxKind.parse(payload.pop("kind"))
    cls = _SETTINGS_BY_KIND[kind]
    return cls(**payload)
