"""Rendering (track, condition) pairs into embeddings.

``ConditionEmbedder`` is the one place audio is read, processed and
embedded; it caches per (track, condition) so experiments share identical
clean vectors, and assembles sets in sorted key order so results do not
depend on worker scheduling.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from ..audio import AudioBuffer, read_wav
from ..effects import apply_chain, apply_fx, scenario_preset
from ..manifest import DatasetManifest
from .features import DIMENSION, embed_builtin
from .records import Condition, EmbeddingRecord, EmbeddingSet

BUILTIN_MODEL_ID = "builtin"


def render_condition(buf: AudioBuffer, condition: Condition) -> AudioBuffer:
    if condition.tag == "clean":
        return buf
    if condition.tag == "fx":
        return apply_fx(buf, condition.kind, condition.level)
    if condition.tag == "chain":
        return apply_chain(buf, scenario_preset(condition.name))
    return apply_chain(buf, scenario_preset(condition.name).prefix(condition.stage))


def ladder_conditions(fx_kinds, levels=range(1, 11), include_clean: bool = True) -> list[Condition]:
    out = [Condition.clean()] if include_clean else []
    for kind in fx_kinds:
        for level in levels:
            out.append(Condition.fx(kind, level))
    return out


class ConditionEmbedder:
    """Caching builtin/external embedding source for one (manifest, model)."""

    def __init__(
        self,
        manifest: DatasetManifest,
        model: str | EmbeddingSet = BUILTIN_MODEL_ID,
        audio_root: Path | None = None,
        jobs: int = 1,
    ):
        self.manifest = manifest
        self.audio_root = Path(audio_root) if audio_root is not None else None
        self.jobs = max(1, jobs)
        if isinstance(model, EmbeddingSet):
            self.external = model
            self.model_id = model.model_id
            self.dimension = model.dimension
        else:
            self.external = None
            self.model_id = model
            self.dimension = DIMENSION
        self._vectors: dict[tuple[str, str], object] = {}
        self._buffers: dict[str, AudioBuffer] = {}

    def _buffer(self, track_id: str) -> AudioBuffer:
        if track_id not in self._buffers:
            self._buffers[track_id] = read_wav(self.manifest.audio_path_for(track_id, self.audio_root))
        return self._buffers[track_id]

    def _compute(self, track_id: str, condition: Condition):
        return embed_builtin(render_condition(self._buffer(track_id), condition))

    def vector(self, track_id: str, condition: Condition):
        key = (track_id, str(condition))
        if key not in self._vectors:
            if self.external is not None:
                self._vectors[key] = self.external.get(track_id, condition)
            else:
                self._vectors[key] = self._compute(track_id, condition)
        return self._vectors[key]

    def embed(self, track_ids, conditions) -> EmbeddingSet:
        """One record per (track, condition), deterministically ordered."""
        pairs = [(t, c) for t in track_ids for c in conditions]
        missing = [(t, c) for t, c in pairs if (t, str(c)) not in self._vectors]
        if self.external is None and self.jobs > 1 and len(missing) > 1:
            for track_id, _ in missing:
                self._buffer(track_id)  # populate cache serially; dict writes stay single-threaded
            with ThreadPoolExecutor(max_workers=self.jobs) as pool:
                vectors = list(pool.map(lambda p: self._compute(*p), missing))
            for (track_id, cond), vec in zip(missing, vectors):
                self._vectors[(track_id, str(cond))] = vec
        out = EmbeddingSet(self.model_id, self.dimension)
        for track_id, cond in pairs:
            out.add(EmbeddingRecord(track_id, cond, self.model_id, self.vector(track_id, cond)))
        return out


def embed_conditions(
    manifest: DatasetManifest,
    conditions,
    model: str | EmbeddingSet = BUILTIN_MODEL_ID,
    audio_root: Path | None = None,
    jobs: int = 1,
) -> EmbeddingSet:
    embedder = ConditionEmbedder(manifest, model, audio_root=audio_root, jobs=jobs)
    return embedder.embed(manifest.track_ids, list(conditions))
