from .conditions import (
    BUILTIN_MODEL_ID,
    ConditionEmbedder,
    embed_conditions,
    ladder_conditions,
    render_condition,
)
from .features import DIMENSION, embed_builtin, feature_names, hz_to_mel, mel_filterbank, mel_to_hz
from .records import Condition, EmbeddingRecord, EmbeddingSet, load_embeddings, save_embeddings

__all__ = [
    "BUILTIN_MODEL_ID", "Condition", "ConditionEmbedder", "DIMENSION",
    "EmbeddingRecord", "EmbeddingSet", "embed_builtin", "embed_conditions",
    "feature_names", "hz_to_mel", "ladder_conditions", "load_embeddings",
    "mel_filterbank", "mel_to_hz", "render_condition", "save_embeddings",
]
