"""Exception types shared across the toolkit.

Everything raised on purpose derives from :class:`FxProbeError`, so callers
(and the CLI exit-code mapping) can distinguish validation failures from
genuine I/O errors, which surface as the interpreter's ``OSError``.
"""


class FxProbeError(Exception):
    """Base class for all toolkit-specific errors."""


class UnsupportedFormat(FxProbeError):
    """WAV encoding or format chunk we do not handle."""


class CorruptFile(FxProbeError):
    """File structure is recognisable but inconsistent (e.g. truncated data)."""


class InvalidLevel(FxProbeError):
    """Intensity level outside the 1..10 ladder."""


class InvalidCutoff(FxProbeError):
    """EQ cutoffs invalid for the buffer's sample rate."""


class UnknownScenario(FxProbeError):
    """Scenario preset name not recognised."""


class InputTooShort(FxProbeError):
    """Audio too short for the analysis window."""


class DimensionMismatch(FxProbeError):
    """Embedding vectors of differing dimension in one set."""


class DuplicateRecord(FxProbeError):
    """Two embedding records share (track_id, condition, model_id)."""


class ParseError(FxProbeError):
    """Malformed line in a structured text file."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class MissingEmbedding(FxProbeError):
    """A requested (track, condition) key is absent from an external set."""

    def __init__(self, track_id: str, condition: str):
        super().__init__(f"no embedding for track {track_id!r}, condition {condition!r}")
        self.track_id = track_id
        self.condition = condition


class DegenerateLabels(FxProbeError):
    """Training labels collapse to a single class."""


class InvalidData(FxProbeError):
    """Non-finite or otherwise unusable numeric input."""


class ManifestError(FxProbeError):
    """Dataset manifest violates its schema."""

    def __init__(self, row: int, message: str):
        super().__init__(f"row {row}: {message}")
        self.row = row
