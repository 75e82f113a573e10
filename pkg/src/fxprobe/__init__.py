"""fxprobe: audit how audio effects move emotion estimates derived from
audio embeddings.

Subpackages: ``audio`` (buffers, WAV I/O, synthesis), ``effects`` (the six
effects, intensity ladder, chains), ``embedding`` (builtin embedder and the
exchange format), ``probes`` (boosted-tree heads and metrics), ``pipeline``
(feature selection), ``projection`` (2-D layout and trajectories),
``experiments`` (the four experiment runners and reports).
"""

from . import audio, effects, embedding, experiments, pipeline, probes, projection
from .errors import FxProbeError

__version__ = "0.1.0"

__all__ = [
    "FxProbeError", "audio", "effects", "embedding", "experiments",
    "pipeline", "probes", "projection", "__version__",
]
