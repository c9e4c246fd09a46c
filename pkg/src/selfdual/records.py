"""Persisted code records: provenance, generators and classification."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional

import numpy as np

from .bincode import BinaryCode, WeightProfile
from .groupring import RingMatrix
from .rings import RingId, codes_of, emit

FORMAT_VERSION = 1


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def bits_to_text(bits: np.ndarray) -> list:
    return ["".join(str(int(b)) for b in row) for row in np.asarray(bits)]


def text_to_bits(rows: list) -> np.ndarray:
    return np.array([[int(ch) for ch in r] for r in rows], dtype=np.uint8)


def ring_matrix_to_json(m: RingMatrix) -> dict:
    return {"ring": m.ring.value, "rows": [emit(r, m.ring) for r in m.entries]}


def ring_matrix_from_json(data: dict) -> RingMatrix:
    ring = RingId.parse(data["ring"])
    return RingMatrix(ring, np.array([codes_of(r, ring) for r in data["rows"]], dtype=np.uint8))


@dataclass
class CodeRecord:
    """One code with enough provenance to rebuild and re-verify it.

    ``source`` is a JSON-able dict whose ``kind`` is ``construct``,
    ``extend``, ``neighbor`` or ``file``. Derived records embed their base
    record so a single file is self-contained.
    """

    id: str
    source: dict
    generator: np.ndarray
    profile: Optional[WeightProfile]
    ring_generator: Optional[RingMatrix] = None
    self_dual: bool = True
    note: str = ""
    created: str = field(default_factory=_now)

    def code(self) -> BinaryCode:
        return BinaryCode(self.generator)

    @property
    def n(self) -> int:
        return int(self.generator.shape[1])

    @property
    def k(self) -> int:
        return int(self.generator.shape[0])

    def summary(self) -> str:
        if self.profile is None:
            return f"{self.id}: [{self.n},{self.k}] {self.note or 'unclassified'}"
        p = self.profile
        fam = f" {p.family} {p.params}" if p.family else ""
        return f"{self.id}: [{p.n},{self.k},{p.d}] type {p.type}{fam}"

    def to_json(self) -> dict:
        return {
            "format": FORMAT_VERSION,
            "id": self.id,
            "source": self.source,
            "generator": bits_to_text(self.generator),
            "ring_generator": ring_matrix_to_json(self.ring_generator) if self.ring_generator else None,
            "profile": self.profile.to_json() if self.profile else None,
            "self_dual": self.self_dual,
            "note": self.note,
            "created": self.created,
        }

    @classmethod
    def from_json(cls, data: dict) -> "CodeRecord":
        if data.get("format") != FORMAT_VERSION:
            raise ValueError(f"unsupported record format {data.get('format')!r}")
        rg = data.get("ring_generator")
        prof = data.get("profile")
        return cls(
            id=data["id"],
            source=data["source"],
            generator=text_to_bits(data["generator"]),
            profile=WeightProfile.from_json(prof) if prof else None,
            ring_generator=ring_matrix_from_json(rg) if rg else None,
            self_dual=data.get("self_dual", True),
            note=data.get("note", ""),
            created=data.get("created", ""),
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, sort_keys=True)

    def save(self, path) -> Path:
        path = Path(path)
        path.write_text(self.dumps() + "\n")
        return path

    @classmethod
    def load(cls, path) -> "CodeRecord":
        return cls.from_json(json.loads(Path(path).read_text()))
