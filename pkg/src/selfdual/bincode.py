"""Binary linear codes: reduction, duality, exact low-weight counts, classification.

Low-weight codewords of a self-dual code are enumerated through two
information sets.  With ``G = [I | A]`` in standard form, ``[A^T | I]``
generates the dual, which is the code itself, so both halves of the
coordinates are information sets.  A codeword of weight ``w`` has at most
``w // 2`` ones on one of the halves, hence messages of weight
``<= w // 2`` through both generators reach every such codeword.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import kernel


class CodeError(ValueError):
    pass


class CountCeilingError(CodeError):
    pass


class EnumeratorError(CodeError):
    """The counts fit none of the known enumerator families."""

    def __init__(self, message: str, counts: Dict[int, int]):
        super().__init__(f"{message}; raw counts {counts}")
        self.counts = counts


#: default largest weight count_weight will compute
DEFAULT_CEILING = 16


def rref(m) -> Tuple[np.ndarray, int, List[int]]:
    """Reduced row echelon form over F2 with leftmost pivots.

    Returns ``(reduced, rank, pivots)``; ``reduced`` keeps all input rows,
    the zero rows last.
    """
    r = (np.array(m, dtype=np.uint8) & 1).copy()
    rows, cols = r.shape
    pivots: List[int] = []
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.flatnonzero(r[rank:, c])
        if nz.size == 0:
            continue
        p = rank + nz[0]
        if p != rank:
            r[[rank, p]] = r[[p, rank]]
        hit = np.flatnonzero(r[:, c])
        hit = hit[hit != rank]
        r[hit] ^= r[rank]
        pivots.append(c)
        rank += 1
    return r, rank, pivots


def rank(m) -> int:
    return rref(m)[1]


def gram(g: np.ndarray) -> np.ndarray:
    g = np.asarray(g, dtype=np.int64)
    return (g @ g.T) & 1


def rains_bound(n: int, type_ii: bool = False) -> int:
    """Upper bound on the minimum weight of a self-dual code of length ``n``."""
    if n % 2:
        raise CodeError("self-dual codes have even length")
    base = 4 * (n // 24)
    if not type_ii and n % 24 == 22:
        return base + 6
    return base + 4


class BinaryCode:
    """Binary linear code given by any spanning set of rows.

    The rows are reduced on construction, so ``generator`` is always a
    full-rank basis in reduced echelon form.
    """

    def __init__(self, rows, n: Optional[int] = None):
        m = np.array(rows, dtype=np.uint8)
        if m.ndim != 2:
            if m.size == 0 and n is not None:
                m = m.reshape(0, n)
            else:
                raise CodeError("generator must be two-dimensional")
        if np.any(m > 1):
            raise CodeError("generator entries must be 0 or 1")
        red, k, piv = rref(m)
        self.n = m.shape[1]
        self.k = k
        self.generator = red[:k]
        self.generator.setflags(write=False)
        self.pivots = piv

    def __repr__(self):
        return f"BinaryCode(n={self.n}, k={self.k})"

    def __eq__(self, other):
        return (
            isinstance(other, BinaryCode)
            and self.n == other.n
            and self.k == other.k
            and np.array_equal(self.generator, other.generator)
        )

    def __hash__(self):
        return hash((self.n, self.k, self.generator.tobytes()))

    # structure

    @cached_property
    def _standard(self) -> Tuple[np.ndarray, np.ndarray]:
        if self.k == 0:
            raise CodeError("the zero code has no standard form")
        rest = [c for c in range(self.n) if c not in set(self.pivots)]
        perm = np.array(self.pivots + rest, dtype=np.intp)
        return self.generator[:, perm], perm

    def standard_form(self) -> Tuple[np.ndarray, np.ndarray]:
        """``([I_k | A], perm)`` where column ``j`` of the result is column ``perm[j]``."""
        return self._standard

    @property
    def redundancy(self) -> np.ndarray:
        """The ``A`` of the standard form ``[I | A]``."""
        return self._standard[0][:, self.k:]

    def dual_generator(self) -> np.ndarray:
        """``[A^T | I]`` in standard-form coordinates."""
        a = self.redundancy
        return np.hstack([a.T, np.eye(self.n - self.k, dtype=np.uint8)])

    def contains(self, vec) -> bool:
        v = np.asarray(vec, dtype=np.uint8).reshape(1, -1)
        if v.shape[1] != self.n:
            raise CodeError("vector length does not match code length")
        return rank(np.vstack([self.generator, v])) == self.k

    def intersection_dim(self, other: "BinaryCode") -> int:
        both = np.vstack([self.generator, other.generator])
        return self.k + other.k - rank(both)

    def is_self_orthogonal(self) -> bool:
        return not gram(self.generator).any()

    def is_self_dual(self) -> bool:
        return 2 * self.k == self.n and self.is_self_orthogonal()

    def contains_all_ones(self) -> bool:
        return self.contains(np.ones(self.n, dtype=np.uint8))

    def is_doubly_even(self) -> bool:
        # a self-orthogonal basis of doubly-even rows spans a doubly-even code
        return self.is_self_orthogonal() and not np.any(self.generator.sum(axis=1) % 4)

    def is_type_ii(self) -> bool:
        return self.is_self_dual() and self.is_doubly_even()

    def type_label(self) -> str:
        if not self.is_self_dual():
            return "not self-dual"
        return "II" if self.is_type_ii() else "I"

    def permuted(self, perm: Sequence[int]) -> "BinaryCode":
        """The code with column ``j`` taken from column ``perm[j]``."""
        return BinaryCode(self.generator[:, np.asarray(perm)])

    # persistence

    def to_text(self) -> str:
        lines = [f"{self.n} {self.k}"]
        lines += ["".join("1" if b else "0" for b in row) for row in self.generator]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "BinaryCode":
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        try:
            n, k = (int(x) for x in lines[0].split())
        except (ValueError, IndexError):
            raise CodeError("expected a header line 'n k'") from None
        body = lines[1:]
        if len(body) != k or any(len(r) != n or set(r) - {"0", "1"} for r in body):
            raise CodeError(f"expected {k} rows of {n} binary digits")
        rows = np.array([[c == "1" for c in r] for r in body], dtype=np.uint8).reshape(k, n)
        code = cls(rows, n=n)
        if code.k != k:
            raise CodeError(f"rows have rank {code.k}, header says {k}")
        return code


# enumeration


class _Halves:
    """Per-level weight histograms of the two information sets, computed lazily."""

    def __init__(self, code: BinaryCode, maxw: int, workers=None, backend=None):
        self.code = code
        self.maxw = maxw
        self.workers = workers
        self.backend = backend
        a = code.redundancy
        self.rows = {"L": kernel.pack_rows(a), "R": kernel.pack_rows(a.T)}
        self.levels: Dict[Tuple[str, int], np.ndarray] = {}

    def level(self, side: str, t: int) -> np.ndarray:
        key = (side, t)
        if key not in self.levels:
            self.levels[key] = kernel.level_histogram(
                self.rows[side], t, self.maxw, workers=self.workers, backend=self.backend
            )
        return self.levels[key]

    def count(self, side: str, t: int, w: int) -> int:
        """Codewords with ``t`` ones on this side's information set and total weight ``w``."""
        other = w - t
        if other < 0 or other > self.maxw:
            return 0
        return int(self.level(side, t)[other])


def _two_set_count(h: _Halves, w: int) -> Tuple[int, int, int]:
    half = w // 2
    n1 = sum(h.count("L", t, w) for t in range(half + 1))
    n2 = sum(h.count("R", t, w) for t in range(half + 1))
    n12 = h.count("L", half, w) if w % 2 == 0 else 0
    return n1, n2, n12


def min_weight(code: BinaryCode, workers=None, backend=None) -> int:
    """Exact minimum nonzero weight."""
    if code.k == 0:
        raise CodeError("the zero code has no minimum weight")
    if code.is_self_dual():
        h = _Halves(code, code.n, workers, backend)
        best = math.inf
        r = 0
        while True:
            r += 1
            for side in ("L", "R"):
                hist = h.level(side, r)
                nz = np.flatnonzero(hist)
                if nz.size:
                    best = min(best, r + int(nz[0]))
            # every codeword of weight <= 2r + 1 has been seen
            if best <= 2 * r + 1 or r >= code.k:
                return int(best)
    if code.k <= 24:
        counts = full_weight_distribution(code, backend=backend)
        return int(np.flatnonzero(counts[1:])[0]) + 1
    # single information set: unseen codewords have weight > r
    rows = kernel.pack_rows(code.redundancy)
    best = math.inf
    for r in range(1, code.k + 1):
        hist = kernel.level_histogram(rows, r, code.n, workers=workers, backend=backend)
        nz = np.flatnonzero(hist)
        if nz.size:
            best = min(best, r + int(nz[0]))
        if best <= r + 1:
            break
    return int(best)


def full_weight_distribution(code: BinaryCode, backend=None) -> np.ndarray:
    """All ``A_w`` by visiting every one of the ``2^k`` codewords."""
    rows = kernel.pack_rows(code.redundancy)
    out = np.zeros(code.n + 1, dtype=np.int64)
    for t in range(code.k + 1):
        hist = kernel.level_histogram(rows, t, code.n - code.k, backend=backend)
        out[t: t + hist.size] += hist[: code.n + 1 - t]
    return out


def count_weights(
    code: BinaryCode,
    weights: Sequence[int],
    ceiling: int = DEFAULT_CEILING,
    workers=None,
    backend=None,
) -> Dict[int, int]:
    """Exact ``A_w`` for each requested ``w`` of a self-dual code."""
    if not code.is_self_dual():
        raise CodeError("two-information-set counting needs a self-dual code")
    weights = sorted(set(int(w) for w in weights))
    top = max(weights, default=0)
    if top > ceiling:
        r = top // 2
        cost = 2 * sum(math.comb(code.k, i) for i in range(r + 1))
        raise CountCeilingError(
            f"weight {top} exceeds the counting ceiling {ceiling}; "
            f"it would visit about {cost:.3g} codewords"
        )
    h = _Halves(code, max(top, 1), workers, backend)
    out = {}
    for w in weights:
        if w == 0:
            out[w] = 1
            continue
        n1, n2, n12 = _two_set_count(h, w)
        out[w] = n1 + n2 - n12
    return out


def count_weight(code: BinaryCode, w: int, **kw) -> int:
    return count_weights(code, [w], **kw)[w]


# enumerator families


@dataclass
class WeightProfile:
    n: int
    d: int
    counts: Dict[int, int]
    type: str = ""
    family: Optional[str] = None
    params: Dict[str, int] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "type": self.type,
            "counts": {str(w): c for w, c in sorted(self.counts.items())},
            "family": self.family,
            "params": dict(self.params),
        }

    @classmethod
    def from_json(cls, data: dict) -> "WeightProfile":
        return cls(
            n=data["n"],
            d=data["d"],
            counts={int(w): c for w, c in data["counts"].items()},
            type=data.get("type", ""),
            family=data.get("family"),
            params=dict(data.get("params") or {}),
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


#: minimum weight and the coefficients needed to pin down each family
FAMILY_WEIGHTS = {56: (10, (10, 12)), 64: (12, (12, 14)), 68: (12, (12, 14)), 80: (14, (14, 16))}


def _exact_div(num: int, den: int, what: str, counts) -> int:
    if num % den:
        raise EnumeratorError(f"{what} = {num}/{den} is not an integer", counts)
    return num // den


def fit_family(n: int, counts: Dict[int, int]) -> Tuple[str, Dict[str, int]]:
    """Invert the enumerator formulas for the extremal/optimal families."""
    if n == 56:
        a = _exact_div(counts[10] - 308, 4, "alpha", counts)
        if counts[12] == 4246 - 8 * a:
            return "W56,1", {"alpha": a}
        if counts[12] == 3990 - 8 * a:
            return "W56,2", {"alpha": a}
    elif n == 64:
        b = _exact_div(counts[12] - 1312, 16, "beta", counts)
        if counts[14] == 22016 - 64 * b:
            return "W64,1", {"beta": b}
        if counts[14] == 23040 - 64 * b:
            return "W64,2", {"beta": b}
    elif n == 68:
        b = _exact_div(counts[12] - 442, 4, "beta", counts)
        if counts[14] == 10864 - 8 * b:
            return "W68,1", {"beta": b}
        g = _exact_div(14960 - 8 * b - counts[14], 256, "gamma", counts)
        return "W68,2", {"gamma": g, "beta": b}
    elif n == 80:
        a = _exact_div(counts[14] - 3200, 4, "alpha", counts)
        b = _exact_div(counts[16] - 47645 + 8 * a, 256, "beta", counts)
        return "W80,2", {"alpha": a, "beta": b}
    else:
        raise EnumeratorError(f"no enumerator families known for n={n}", counts)
    raise EnumeratorError("enumerator outside known families", counts)


def family_counts(family: str, params: Dict[str, int]) -> Dict[int, int]:
    """Evaluate a family's leading coefficients; inverse of ``fit_family``."""
    a, b, g = params.get("alpha", 0), params.get("beta", 0), params.get("gamma", 0)
    table = {
        "W56,1": {10: 308 + 4 * a, 12: 4246 - 8 * a},
        "W56,2": {10: 308 + 4 * a, 12: 3990 - 8 * a},
        "W64,1": {12: 1312 + 16 * b, 14: 22016 - 64 * b},
        "W64,2": {12: 1312 + 16 * b, 14: 23040 - 64 * b},
        "W68,1": {12: 442 + 4 * b, 14: 10864 - 8 * b},
        "W68,2": {12: 442 + 4 * b, 14: 14960 - 8 * b - 256 * g},
        "W80,2": {14: 3200 + 4 * a, 16: 47645 - 8 * a + 256 * b},
    }
    return table[family]


def classify_enumerator(
    code: BinaryCode, d: Optional[int] = None, workers=None, backend=None
) -> WeightProfile:
    """Minimum weight, leading coefficients and (where known) enumerator family."""
    if not code.is_self_dual():
        raise CodeError("classification needs a self-dual code")
    if d is None:
        d = min_weight(code, workers=workers, backend=backend)
    label = code.type_label()
    spec = FAMILY_WEIGHTS.get(code.n)
    if spec is None or label == "II" and code.n != 64:
        ws = [d, d + 2] if d + 2 <= DEFAULT_CEILING else [d]
        counts = count_weights(code, ws, workers=workers, backend=backend)
        return WeightProfile(code.n, d, counts, label)
    fam_d, ws = spec
    if d != fam_d:
        counts = count_weights(code, [d], workers=workers, backend=backend)
        raise EnumeratorError(f"minimum weight {d}, families at n={code.n} need {fam_d}", counts)
    counts = count_weights(code, ws, workers=workers, backend=backend)
    if label == "II":
        return WeightProfile(code.n, d, counts, label)
    family, params = fit_family(code.n, counts)
    return WeightProfile(code.n, d, counts, label, family, params)


def is_extremal(code: BinaryCode, d: int) -> bool:
    return d == rains_bound(code.n, code.is_type_ii())
