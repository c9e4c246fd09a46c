"""End-to-end builders: parameters -> ring code -> binary code -> record."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Optional

import numpy as np

from .bincode import (
    BinaryCode,
    CodeError,
    EnumeratorError,
    WeightProfile,
    classify_enumerator,
    min_weight,
)
from .construct import ConstructionParams, build_generator, is_self_dual_over_ring
from .derive import (
    DerivationError,
    ExtensionSpec,
    extend,
    full_neighbor_vector,
    neighbor,
    neighbor_in_standard_coordinates,
)
from .gray import binary_image, chain_for, ring_image
from .groupring import GroupRingElem, GroupSpec, RingMatrix
from .manifests import Row, find_row
from .records import CodeRecord
from .rings import RingElem, RingId, codes_of, emit

COORDS = ("raw", "std")


def profile_of(code: BinaryCode, workers=None, backend=None):
    """Classify a self-dual binary code; never raises on an off-family result.

    Returns ``(profile, note)``; the note explains a missing family fit.
    """
    d = min_weight(code, workers=workers, backend=backend)
    try:
        return classify_enumerator(code, d, workers=workers, backend=backend), ""
    except EnumeratorError as e:
        return WeightProfile(code.n, d, dict(e.counts), code.type_label()), str(e)


def params_from_source(src: dict) -> ConstructionParams:
    group = GroupSpec.parse(src["group"])
    ring = RingId.parse(src["ring"])
    return ConstructionParams(
        group,
        ring,
        tuple(codes_of(src["gamma"], ring)),
        GroupRingElem.from_text(group, ring, src["v1"]),
        GroupRingElem.from_text(group, ring, src["v2"]),
    )


def construct_record(
    params: ConstructionParams,
    alternate: bool = False,
    layout: str = "block",
    record_id: Optional[str] = None,
    workers=None,
    backend=None,
) -> CodeRecord:
    gen = build_generator(params)
    source = dict(params.describe(), kind="construct",
                  chain="alternate" if alternate else "default", layout=layout)
    bc = binary_image(gen, chain_for(params.ring, alternate), layout)
    rid = record_id or "construct"
    if not is_self_dual_over_ring(gen):
        return CodeRecord(rid, source, bc.generator, None, gen, False,
                          "not self-dual over the ring; not classified")
    prof, note = profile_of(bc, workers, backend)
    return CodeRecord(rid, source, bc.generator, prof, gen, True, note)


def ring_base(record: CodeRecord, layout: str = "block") -> RingMatrix:
    """The F2 or F2+uF2 generator an extension starts from."""
    rg = record.ring_generator
    if rg is None:
        return RingMatrix(RingId.F2, record.generator)
    if rg.ring is RingId.F4U:
        return ring_image(rg, layout)
    if rg.ring in (RingId.F2, RingId.F2U):
        return rg
    raise DerivationError(f"cannot extend a code over {rg.ring.value}; need F2, F2+uF2 or F4+uF4")


def extend_record(
    base: CodeRecord,
    c: str,
    x: str,
    layout: str = "block",
    record_id: Optional[str] = None,
    workers=None,
    backend=None,
) -> CodeRecord:
    rb = ring_base(base, layout)
    spec = ExtensionSpec(rb, RingElem(rb.ring, codes_of(c, rb.ring)[0]), tuple(codes_of(x, rb.ring)))
    ext = extend(spec)
    bc = binary_image(ext, layout=layout)
    source = {"kind": "extend", "base": base.to_json(), "c": emit([spec.c], rb.ring),
              "X": emit(spec.x, rb.ring), "layout": layout}
    prof, note = profile_of(bc, workers, backend)
    return CodeRecord(record_id or "extend", source, bc.generator, prof, ext, True, note)


def neighbor_record(
    base: CodeRecord,
    x,
    coords: str = "raw",
    record_id: Optional[str] = None,
    workers=None,
    backend=None,
) -> CodeRecord:
    if coords not in COORDS:
        raise ValueError(f"coords must be one of {COORDS}")
    x = np.asarray(x, dtype=np.uint8)
    fn = neighbor if coords == "raw" else neighbor_in_standard_coordinates
    d = fn(base.code(), x)
    source = {"kind": "neighbor", "base": base.to_json(), "coords": coords,
              "x": "".join(str(int(b)) for b in x)}
    prof, note = profile_of(d, workers, backend)
    return CodeRecord(record_id or "neighbor", source, d.generator, prof, None, True, note)


def file_record(code: BinaryCode, path: str = "", workers=None, backend=None) -> CodeRecord:
    if not code.is_self_dual():
        return CodeRecord("file", {"kind": "file", "path": path}, code.generator, None,
                          self_dual=False, note="not self-dual; not classified")
    prof, note = profile_of(code, workers, backend)
    return CodeRecord("file", {"kind": "file", "path": path}, code.generator, prof, note=note)


def rebuild(record: CodeRecord, classify: bool = True) -> CodeRecord:
    """Recompute a record from its provenance alone."""
    src = record.source
    kind = src.get("kind")
    if kind == "construct":
        return construct_record(params_from_source(src), src.get("chain") == "alternate",
                                src.get("layout", "block"), record.id)
    base = CodeRecord.from_json(src["base"])
    if kind == "extend":
        return extend_record(base, src["c"], src["X"], src.get("layout", "block"), record.id)
    if kind == "neighbor":
        x = np.array([int(ch) for ch in src["x"]], dtype=np.uint8)
        return neighbor_record(base, x, src.get("coords", "raw"), record.id)
    raise ValueError(f"record kind {kind!r} has no rebuild recipe")


@dataclass
class VerifyReport:
    ok: bool
    messages: List[str] = field(default_factory=list)
    profile: Optional[WeightProfile] = None

    def as_dict(self) -> dict:
        return {"ok": self.ok, "messages": self.messages,
                "profile": self.profile.to_json() if self.profile else None}


def verify(record: CodeRecord, workers=None, backend=None) -> VerifyReport:
    """Re-derive the profile from the stored generator and, where possible,
    rebuild the generator from provenance."""
    msgs = []
    ok = True
    code = record.code()
    if code.k != record.k:
        ok = False
        msgs.append(f"stored generator has rank {code.k}, not {record.k}")
    if not code.is_self_dual():
        msgs.append("stored generator is not self-dual")
        return VerifyReport(record.profile is None and not record.self_dual, msgs)
    prof, _ = profile_of(code, workers, backend)
    if record.profile is None or prof.to_json() != record.profile.to_json():
        ok = False
        msgs.append(f"profile mismatch: stored {record.profile and record.profile.dumps()}, "
                    f"recomputed {prof.dumps()}")
    if record.source.get("kind") in ("construct", "extend", "neighbor"):
        again = rebuild(record)
        if not np.array_equal(again.generator, record.generator):
            ok = False
            msgs.append("rebuilding from provenance gives a different generator")
    return VerifyReport(ok, msgs, prof)


# ---------------------------------------------------------------- manifests

def _construct_params(row: Row) -> ConstructionParams:
    f = row.fields
    return ConstructionParams.from_text(f["group"], f["ring"], f["g12"], f["v1"], f["g34"], f["v2"])


@lru_cache(maxsize=None)
def record_for_row(row_id: str, coords: str = "raw", layout: str = "block",
                   alternate: bool = False) -> CodeRecord:
    """Build the code a manifest row describes; bases are built recursively."""
    row = find_row(row_id)
    if row.skip:
        raise CodeError(f"{row_id} is marked unverifiable: {row.skip}")
    if row.kind == "construct":
        return construct_record(_construct_params(row), alternate, layout, row_id)
    base = record_for_row(row.fields["base"], coords, layout, alternate)
    if row.kind == "extend":
        return extend_record(base, row.fields["c"], row.fields["X"], layout, row_id)
    if row.kind == "neighbor":
        x = full_neighbor_vector(row.fields["x"], int(row.fields.get("zero_prefix", 0)))
        return neighbor_record(base, x, coords, row_id)
    raise ValueError(f"unknown row kind {row.kind!r}")
