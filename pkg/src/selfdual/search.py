"""Seeded or exhaustive search over construction parameters.

Candidates are screened by the exact necessary identity on
``v1* v1 + v2* v2`` before any matrix is built. In exhaustive mode the
identity is used as a join: ``v2`` is looked up by its norm, so candidates
that fail it are never visited.

Results are deduplicated by a weight fingerprint. Equal fingerprints do not
mean equivalent codes; the ledger keeps one representative per fingerprint
and counts the hits.
"""

from __future__ import annotations

import hashlib
import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from .bincode import rains_bound
from .construct import ConstructionParams, build_generator, is_self_dual_over_ring
from .gray import EXPANSION, binary_image, chain_for
from .groupring import GroupRingElem, GroupSpec
from .pipeline import profile_of
from .records import bits_to_text
from .rings import BIT_ONE, MUL, RingId, codes_of

FINGERPRINT_NOTE = (
    "entries are grouped by (n, k, d, low-weight counts, family parameters); "
    "codes sharing a fingerprint need not be equivalent"
)

#: largest |R|^p enumerated exhaustively under mode "auto"
EXHAUSTIVE_LIMIT = 1 << 16


class SearchError(ValueError):
    pass


@dataclass
class SearchConfig:
    group: str
    ring: str
    gamma: Optional[str] = None  # fixed "g1,g2,g3,g4"; None means all admissible
    mode: str = "auto"  # auto | exhaustive | random
    samples: int = 10000  # draws in random mode
    budget: Optional[int] = None  # full evaluations per run
    target_d: Optional[int] = None
    target_type: Optional[str] = None  # "I" or "II"
    family: Optional[str] = None
    params: Dict[str, int] = field(default_factory=dict)
    seed: int = 0
    workers: int = 1
    alternate: bool = False
    layout: str = "block"
    resume: Optional[str] = None

    def __post_init__(self):
        if self.mode not in ("auto", "exhaustive", "random"):
            raise SearchError(f"unknown mode {self.mode!r}")
        if self.target_type not in (None, "I", "II"):
            raise SearchError("target type must be I or II")
        if self.workers < 1:
            raise SearchError("workers must be positive")
        self.seed &= (1 << 64) - 1

    @property
    def group_spec(self) -> GroupSpec:
        return GroupSpec.parse(self.group)

    @property
    def ring_id(self) -> RingId:
        return RingId.parse(self.ring)

    @property
    def length(self) -> int:
        return EXPANSION[self.ring_id] * (4 * self.group_spec.order + 4)

    def resolved_mode(self) -> str:
        if self.mode != "auto":
            return self.mode
        space = self.ring_id.size ** self.group_spec.order
        return "exhaustive" if space <= EXHAUSTIVE_LIMIT else "random"

    def key(self) -> str:
        """Hash of everything that defines the candidate sequence and target."""
        d = asdict(self)
        for k in ("budget", "workers", "resume"):
            d.pop(k)
        blob = json.dumps(d, sort_keys=True)
        return hashlib.sha256(blob.encode()).hexdigest()[:12]

    @classmethod
    def from_dict(cls, data: dict) -> "SearchConfig":
        known = {f for f in cls.__dataclass_fields__}
        extra = set(data) - known
        if extra:
            raise SearchError(f"unknown config keys: {', '.join(sorted(extra))}")
        return cls(**data)


# ----------------------------------------------------------------- domain

def admissible_gammas(ring: RingId) -> List[Tuple[int, ...]]:
    """All border quadruples with sum of squares 1 (the corner row's norm)."""
    out = []
    for g in itertools.product(ring.codes(), repeat=4):
        s = 0
        for x in g:
            s ^= int(MUL[x, x])
        if s == BIT_ONE:
            out.append(g)
    return out


def all_vectors(ring: RingId, p: int) -> np.ndarray:
    codes = np.array(ring.codes(), dtype=np.uint8)
    idx = np.indices((len(codes),) * p).reshape(p, -1).T
    return codes[idx]


def norms(group: GroupSpec, vecs: np.ndarray) -> np.ndarray:
    """Row-wise ``v* v`` for a stack of coefficient vectors."""
    sidx = group.sigma_index
    p = group.order
    out = np.zeros_like(vecs)
    for i in range(p):
        for j in range(p):
            out[:, sidx[i, j]] ^= MUL[vecs[:, i], vecs[:, j]]
    return out


def screen_target_codes(group: GroupSpec, gamma) -> np.ndarray:
    s = gamma[1] ^ gamma[3]
    sq = int(MUL[s, s])
    t = np.full(group.order, sq, dtype=np.uint8)
    t[0] ^= BIT_ONE
    return t


@dataclass(frozen=True)
class Candidate:
    position: int
    gamma: Tuple[int, ...]
    v1: Tuple[int, ...]
    v2: Tuple[int, ...]


def _exhaustive(cfg: SearchConfig, gammas, start: int) -> Iterator[Candidate]:
    grp, ring = cfg.group_spec, cfg.ring_id
    vecs = all_vectors(ring, grp.order)
    nv = len(vecs)
    nrm = norms(grp, vecs)
    by_norm: Dict[bytes, np.ndarray] = {}
    keys = [r.tobytes() for r in nrm]
    for i, k in enumerate(keys):
        by_norm.setdefault(k, []).append(i)
    by_norm = {k: np.array(v) for k, v in by_norm.items()}
    g0, rest = divmod(start, nv * nv)
    i10, i20 = divmod(rest, nv)
    for gi in range(g0, len(gammas)):
        target = screen_target_codes(grp, gammas[gi])
        for i1 in range(i10 if gi == g0 else 0, nv):
            want = (nrm[i1] ^ target).tobytes()
            partners = by_norm.get(want)
            if partners is None:
                continue
            lo = i20 if (gi == g0 and i1 == i10) else 0
            for i2 in partners[np.searchsorted(partners, lo):]:
                pos = (gi * nv + i1) * nv + int(i2)
                yield Candidate(pos, gammas[gi], tuple(int(c) for c in vecs[i1]),
                                tuple(int(c) for c in vecs[i2]))


def _random(cfg: SearchConfig, gammas, start: int, stats: dict) -> Iterator[Candidate]:
    grp, ring = cfg.group_spec, cfg.ring_id
    codes = np.array(ring.codes(), dtype=np.uint8)
    p = grp.order
    for i in range(start, cfg.samples):
        rng = np.random.default_rng([cfg.seed, i])
        g = gammas[int(rng.integers(len(gammas)))]
        v = codes[rng.integers(0, len(codes), size=(2, p))]
        n = norms(grp, v)
        if not np.array_equal(n[0] ^ n[1], screen_target_codes(grp, g)):
            stats["screened_out"] += 1
            continue
        yield Candidate(i, g, tuple(int(c) for c in v[0]), tuple(int(c) for c in v[1]))


# ----------------------------------------------------------------- evaluate

def _evaluate(job) -> Optional[dict]:
    cfg_d, cand = job
    cfg = SearchConfig(**cfg_d)
    grp, ring = cfg.group_spec, cfg.ring_id
    params = ConstructionParams(
        grp, ring, cand.gamma,
        GroupRingElem(grp, ring, cand.v1), GroupRingElem(grp, ring, cand.v2),
    )
    gen = build_generator(params)
    if not is_self_dual_over_ring(gen):
        return {"position": cand.position, "self_dual": False}
    bc = binary_image(gen, chain_for(ring, cfg.alternate), cfg.layout)
    prof, note = profile_of(bc)
    hit = {"position": cand.position, "self_dual": True}
    if cfg.target_d is not None and prof.d != cfg.target_d:
        return hit
    if cfg.target_type and prof.type != cfg.target_type:
        return hit
    if cfg.family and prof.family != cfg.family:
        return hit
    if any(prof.params.get(k) != v for k, v in cfg.params.items()):
        return hit
    hit["match"] = {
        "params": params.describe(),
        "profile": prof.to_json(),
        "generator": bits_to_text(bc.generator),
        "note": note,
    }
    return hit


def fingerprint(profile: dict, k: int) -> tuple:
    counts = tuple(sorted((int(w), c) for w, c in profile["counts"].items()))
    return (profile["n"], k, profile["d"], counts, profile.get("family") or "",
            tuple(sorted((profile.get("params") or {}).items())))


@dataclass
class Ledger:
    config: dict
    entries: List[dict] = field(default_factory=list)
    evaluated: int = 0
    screened_out: int = 0
    not_self_dual: int = 0
    complete: bool = True
    resume: Optional[str] = None
    note: str = FINGERPRINT_NOTE

    def fingerprints(self) -> List[tuple]:
        return [_as_tuple(e["fingerprint"]) for e in self.entries]

    def to_json(self) -> dict:
        return asdict(self)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, sort_keys=True, default=list)


def _merge(matches: List[dict]) -> List[dict]:
    groups: Dict[tuple, dict] = {}
    for m in sorted(matches, key=lambda m: m["position"]):
        fp = fingerprint(m["match"]["profile"], len(m["match"]["generator"]))
        if fp in groups:
            groups[fp]["hits"] += 1
            continue
        entry = dict(m["match"], position=m["position"], hits=1, fingerprint=_jsonable(fp))
        groups[fp] = entry
    return [groups[fp] for fp in sorted(groups)]


def _as_tuple(x):
    if isinstance(x, (list, tuple)):
        return tuple(_as_tuple(y) for y in x)
    return x


def _jsonable(fp):
    if isinstance(fp, tuple):
        return [_jsonable(x) for x in fp]
    return fp


def run_search(cfg: SearchConfig) -> Ledger:
    ledger = Ledger(config=asdict(cfg))
    grp, ring = cfg.group_spec, cfg.ring_id
    n = cfg.length
    if cfg.target_d is not None:
        bound = rains_bound(n, cfg.target_type == "II")
        if cfg.target_d > bound:
            ledger.note = f"target d={cfg.target_d} exceeds the bound {bound} at n={n}; nothing to search. " + FINGERPRINT_NOTE
            return ledger
    gammas = [tuple(codes_of(cfg.gamma, ring))] if cfg.gamma else admissible_gammas(ring)
    start = 0
    if cfg.resume:
        key, _, cursor = cfg.resume.partition(":")
        if key != cfg.key():
            raise SearchError("resume token belongs to a different search configuration")
        start = int(cursor)
    stats = {"screened_out": 0}
    if cfg.resolved_mode() == "exhaustive":
        stream = _exhaustive(cfg, gammas, start)
    else:
        stream = _random(cfg, gammas, start, stats)
    batch = []
    for cand in stream:
        if cfg.budget is not None and len(batch) >= cfg.budget:
            ledger.complete = False
            ledger.resume = f"{cfg.key()}:{cand.position}"
            break
        batch.append(cand)
    cfg_d = asdict(cfg)
    jobs = [(cfg_d, c) for c in batch]
    if cfg.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            results = list(pool.map(_evaluate, jobs, chunksize=max(1, len(jobs) // (4 * cfg.workers))))
    else:
        results = [_evaluate(j) for j in jobs]
    ledger.evaluated = len(results)
    ledger.screened_out = stats["screened_out"]
    ledger.not_self_dual = sum(1 for r in results if not r["self_dual"])
    ledger.entries = _merge([r for r in results if "match" in r])
    return ledger
