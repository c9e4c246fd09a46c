"""Re-run the built-in manifests and compare against the published values."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .bincode import CodeError
from .construct import ConstructionParams, build_generator, is_self_dual_over_ring
from .derive import DerivationError
from .manifests import TABLES, Row, find_row
from .pipeline import COORDS, _construct_params, construct_record, record_for_row
from .records import CodeRecord
from .rings import RingError, emit

PASS, FAIL, SKIP = "PASS", "FAIL", "SKIP"


def observed_of(record: CodeRecord) -> dict:
    p = record.profile
    if p is None:
        return {"n": record.n, "k": record.k, "self_dual": False}
    obs = {"n": p.n, "k": record.k, "d": p.d, "type": p.type}
    if p.family:
        obs["family"] = p.family
        obs["params"] = dict(p.params)
    return obs


def mismatches(expect: dict, observed: dict) -> List[str]:
    if observed.get("self_dual") is False:
        return ["not self-dual over the ring"]
    out = []
    for key, want in expect.items():
        got = observed.get(key)
        if got != want:
            out.append(f"{key}: expected {want}, got {got}")
    return out


@dataclass
class RowResult:
    row_id: str
    status: str
    expected: dict
    observed: dict = field(default_factory=dict)
    message: str = ""
    seconds: float = 0.0
    interpretation: Optional[str] = None
    suggestions: List[str] = field(default_factory=list)

    def line(self) -> str:
        s = f"{self.status:4} {self.row_id:10} {self.seconds:6.2f}s"
        if self.interpretation:
            s += f" coords={self.interpretation}"
        if self.status == PASS:
            obs = self.observed
            s += f"  [{obs['n']},{obs['k']},{obs['d']}] {obs['type']}"
            if "family" in obs:
                s += f" {obs['family']} {obs['params']}"
        elif self.message:
            s += "  " + self.message
        for sug in self.suggestions:
            s += f"\n     candidate fix: {sug}"
        return s

    def as_dict(self) -> dict:
        return {
            "row": self.row_id,
            "status": self.status,
            "expected": self.expected,
            "observed": self.observed,
            "message": self.message,
            "seconds": round(self.seconds, 3),
            "interpretation": self.interpretation,
            "suggestions": self.suggestions,
        }


def _attempt(row: Row, coords: str, layout: str, alternate: bool):
    try:
        rec = record_for_row(row.id, coords, layout, alternate)
    except (DerivationError, CodeError, RingError, ValueError) as e:
        return None, [f"{type(e).__name__}: {e}"]
    obs = observed_of(rec)
    if rec.note:
        obs["note"] = rec.note
    return obs, mismatches(row.expect, obs)


def run_row(
    row_id: str,
    coords: str = "auto",
    layout: str = "block",
    alternate: bool = False,
    diagnose: bool = False,
) -> RowResult:
    """Reproduce one row.

    ``coords`` only affects neighbor rows: ``std`` reads the vector in the
    base code's standard-form coordinates, ``raw`` in construction order and
    ``auto`` tries ``std`` then ``raw``, naming whichever was used.
    """
    row = find_row(row_id)
    t0 = time.perf_counter()
    if row.skip:
        return RowResult(row.id, SKIP, row.expect, message=row.skip)
    needs_coords = row.kind == "neighbor"
    tries = [None]
    if needs_coords:
        tries = list(COORDS[::-1]) if coords == "auto" else [coords]
    notes = []
    obs, bad, used = None, ["not run"], None
    for c in tries:
        obs, bad = _attempt(row, c or "raw", layout, alternate)
        used = c
        if not bad:
            break
        if c is not None:
            notes.append(f"coords={c}: " + "; ".join(bad))
    status = PASS if not bad else FAIL
    if status == PASS:
        msg = "; ".join(notes)
        if notes:
            msg = "passed only after switching interpretation (" + msg + ")"
    else:
        msg = " | ".join(notes) if notes else "; ".join(bad)
    res = RowResult(row.id, status, row.expect, obs or {}, msg, 0.0, used)
    if diagnose and status == FAIL and row.kind == "construct":
        res.suggestions = single_entry_fixes(row)
    res.seconds = time.perf_counter() - t0
    return res


def single_entry_fixes(row: Row, limit: int = 8) -> List[str]:
    """Single-coordinate changes to gamma, v1 or v2 that make the row match.

    Only candidates that are self-dual over the ring are classified.
    """
    base = _construct_params(row)
    ring = base.ring
    out = []
    slots = [("gamma", i) for i in range(4)] + [("v1", i) for i in range(base.p)] + [("v2", i) for i in range(base.p)]
    for name, i in slots:
        for code in ring.codes():
            gamma = list(base.gamma)
            v1, v2 = list(base.v1.coeffs), list(base.v2.coeffs)
            vec = {"gamma": gamma, "v1": v1, "v2": v2}[name]
            if vec[i] == code:
                continue
            vec[i] = code
            cand = ConstructionParams(
                base.group, ring, tuple(gamma),
                type(base.v1)(base.group, ring, tuple(v1)),
                type(base.v2)(base.group, ring, tuple(v2)),
            )
            if not is_self_dual_over_ring(build_generator(cand)):
                continue
            rec = construct_record(cand)
            if not mismatches(row.expect, observed_of(rec)):
                old = {"gamma": base.gamma, "v1": base.v1.coeffs, "v2": base.v2.coeffs}[name][i]
                out.append(f"{name}[{i}]: {emit([old], ring)} -> {emit([code], ring)}")
                if len(out) >= limit:
                    return out
    return out


def run_table(table: str, **kw) -> List[RowResult]:
    if table not in TABLES:
        raise KeyError(f"unknown table {table!r}; known: {', '.join(TABLES)}")
    return [run_row(r.id, **kw) for r in TABLES[table]]


def summarize(results: List[RowResult]) -> Dict[str, int]:
    counts = {PASS: 0, FAIL: 0, SKIP: 0}
    for r in results:
        counts[r.status] += 1
    return counts
