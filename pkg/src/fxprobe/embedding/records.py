"""Embedding records, sets, and the line-delimited exchange format.

Exchange format, one record per line:

    #fxemb v1 model=<id> dim=<D> [key=value]...
    <track_id>\t<condition>\t<v1>,<v2>,...,<vD>

Condition grammar: ``clean | fx:<kind>:<level> | chain:<name> |
chainstage:<name>:<k>``. Values are decimal text written at full
round-trip precision.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..effects import FxKind, check_level
from ..errors import DimensionMismatch, DuplicateRecord, InvalidData, InvalidLevel, ParseError


@dataclass(frozen=True)
class Condition:
    tag: str
    kind: FxKind | None = None
    level: int | None = None
    name: str | None = None
    stage: int | None = None

    def __post_init__(self):
        if self.tag == "clean":
            pass
        elif self.tag == "fx":
            if self.kind is None or self.level is None:
                raise InvalidData("fx condition needs kind and level")
            check_level(self.level)
        elif self.tag == "chain":
            if not self.name:
                raise InvalidData("chain condition needs a name")
        elif self.tag == "chainstage":
            if not self.name or self.stage is None or self.stage < 1:
                raise InvalidData("chainstage condition needs a name and stage >= 1")
        else:
            raise InvalidData(f"unknown condition tag {self.tag!r}")

    def __str__(self) -> str:
        if self.tag == "clean":
            return "clean"
        if self.tag == "fx":
            return f"fx:{self.kind.value}:{self.level}"
        if self.tag == "chain":
            return f"chain:{self.name}"
        return f"chainstage:{self.name}:{self.stage}"

    @classmethod
    def clean(cls) -> "Condition":
        return cls("clean")

    @classmethod
    def fx(cls, kind: FxKind | str, level: int) -> "Condition":
        if isinstance(kind, str):
            kind = FxKind.parse(kind)
        return cls("fx", kind=kind, level=level)

    @classmethod
    def chain(cls, name: str) -> "Condition":
        return cls("chain", name=name)

    @classmethod
    def chainstage(cls, name: str, stage: int) -> "Condition":
        return cls("chainstage", name=name, stage=stage)

    @classmethod
    def parse(cls, text: str) -> "Condition":
        parts = text.strip().split(":")
        try:
            if parts == ["clean"]:
                return cls.clean()
            if parts[0] == "fx" and len(parts) == 3:
                return cls.fx(parts[1], int(parts[2]))
            if parts[0] == "chain" and len(parts) == 2:
                return cls.chain(parts[1])
            if parts[0] == "chainstage" and len(parts) == 3:
                return cls.chainstage(parts[1], int(parts[2]))
        except (ValueError, InvalidData, InvalidLevel) as exc:
            raise InvalidData(f"bad condition {text!r}: {exc}") from None
        raise InvalidData(f"bad condition {text!r}")


@dataclass(frozen=True)
class EmbeddingRecord:
    track_id: str
    condition: Condition
    model_id: str
    vector: np.ndarray

    def __post_init__(self):
        vec = np.asarray(self.vector, dtype=np.float64)
        if vec.ndim != 1:
            raise InvalidData(f"vector must be 1-D, got shape {vec.shape}")
        if not np.all(np.isfinite(vec)):
            raise InvalidData(f"non-finite vector for ({self.track_id}, {self.condition})")
        vec.setflags(write=False)
        object.__setattr__(self, "vector", vec)

    @property
    def key(self) -> tuple[str, str]:
        return (self.track_id, str(self.condition))


class EmbeddingSet:
    """Uniform-dimension collection of records, iterated in (track, condition) order."""

    def __init__(self, model_id: str, dimension: int):
        if dimension <= 0:
            raise InvalidData(f"dimension must be positive, got {dimension}")
        self.model_id = model_id
        self.dimension = dimension
        self._records: dict[tuple[str, str], EmbeddingRecord] = {}

    def add(self, record: EmbeddingRecord) -> None:
        if record.model_id != self.model_id:
            raise InvalidData(f"record model {record.model_id!r} != set model {self.model_id!r}")
        if record.vector.shape[0] != self.dimension:
            raise DimensionMismatch(
                f"({record.track_id}, {record.condition}): dim {record.vector.shape[0]} != {self.dimension}"
            )
        if record.key in self._records:
            raise DuplicateRecord(f"duplicate record {record.key}")
        self._records[record.key] = record

    def __len__(self) -> int:
        return len(self._records)

    def __iter__(self):
        return iter(self.records())

    def records(self) -> list[EmbeddingRecord]:
        return [self._records[k] for k in sorted(self._records)]

    def __contains__(self, key: tuple[str, Condition | str]) -> bool:
        track, cond = key
        return (track, str(cond)) in self._records

    def get(self, track_id: str, condition: Condition | str) -> np.ndarray:
        try:
            return self._records[(track_id, str(condition))].vector
        except KeyError:
            from ..errors import MissingEmbedding

            raise MissingEmbedding(track_id, str(condition)) from None

    def matrix(self, keys: list[tuple[str, Condition | str]]) -> np.ndarray:
        return np.stack([self.get(t, c) for t, c in keys])

    def __eq__(self, other) -> bool:
        if not isinstance(other, EmbeddingSet):
            return NotImplemented
        if (self.model_id, self.dimension) != (other.model_id, other.dimension):
            return False
        if sorted(self._records) != sorted(other._records):
            return False
        return all(
            np.array_equal(self._records[k].vector, other._records[k].vector)
            for k in self._records
        )


def save_embeddings(embeddings: EmbeddingSet, path, extra_header: dict | None = None) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        header = f"#fxemb v1 model={embeddings.model_id} dim={embeddings.dimension}"
        for key, value in (extra_header or {}).items():
            header += f" {key}={value}"
        fh.write(header + "\n")
        for record in embeddings.records():
            values = ",".join(repr(float(v)) for v in record.vector)
            fh.write(f"{record.track_id}\t{record.condition}\t{values}\n")


def load_embeddings(path) -> EmbeddingSet:
    with open(path, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines or not lines[0].startswith("#fxemb v1"):
        raise ParseError(1, "missing '#fxemb v1' header")
    fields = dict(
        token.split("=", 1) for token in lines[0].split()[2:] if "=" in token
    )
    if "model" not in fields or "dim" not in fields:
        raise ParseError(1, "header must declare model=<id> and dim=<D>")
    try:
        dim = int(fields["dim"])
    except ValueError:
        raise ParseError(1, f"bad dim {fields['dim']!r}") from None
    out = EmbeddingSet(fields["model"], dim)
    for line_no, line in enumerate(lines[1:], start=2):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise ParseError(line_no, f"expected 3 tab-separated fields, got {len(parts)}")
        track_id, cond_text, values_text = parts
        try:
            condition = Condition.parse(cond_text)
        except InvalidData as exc:
            raise ParseError(line_no, str(exc)) from None
        try:
            vector = np.array([float(v) for v in values_text.split(",")], dtype=np.float64)
        except ValueError:
            raise ParseError(line_no, "unparseable vector value") from None
        record = EmbeddingRecord(track_id, condition, out.model_id, vector)
        out.add(record)
    return out
