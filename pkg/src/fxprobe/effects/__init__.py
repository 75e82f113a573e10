from .apply import (
    apply_chain,
    apply_chorus,
    apply_delay,
    apply_distortion,
    apply_eq,
    apply_fx,
    apply_phaser,
    apply_reverb,
    apply_settings,
)
from .settings import (
    Chorus,
    Delay,
    Distortion,
    Eq,
    FxChain,
    FxKind,
    FxSettings,
    Phaser,
    Reverb,
    SCENARIO_NAMES,
    check_level,
    intensity_to_settings,
    scenario_preset,
    settings_from_dict,
    settings_to_dict,
)

__all__ = [
    "Chorus", "Delay", "Distortion", "Eq", "FxChain", "FxKind", "FxSettings",
    "Phaser", "Reverb", "SCENARIO_NAMES", "apply_chain", "apply_chorus",
    "apply_delay", "apply_distortion", "apply_eq", "apply_fx", "apply_phaser",
    "apply_reverb", "apply_settings", "check_level", "intensity_to_settings",
    "scenario_preset", "settings_from_dict", "settings_to_dict",
]
