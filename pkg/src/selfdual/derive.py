"""Deriving new self-dual codes: the length n+2 extension and binary neighbors."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .bincode import BinaryCode, CodeError
from .groupring import RingMatrix, matmul_codes
from .rings import BIT_ONE, MUL, RingElem, RingError, RingId, codes_of


class DerivationError(ValueError):
    pass


def inner(x: Sequence[int], y: Sequence[int]) -> int:
    """Euclidean inner product of two code vectors, as a ring code."""
    s = 0
    for a, b in zip(x, y):
        s ^= int(MUL[a, b])
    return s


@dataclass(frozen=True)
class ExtensionSpec:
    base: RingMatrix
    c: RingElem
    x: tuple

    def __post_init__(self):
        ring = self.base.ring
        if ring not in (RingId.F2, RingId.F2U):
            raise DerivationError("extension is defined over F2 and F2+uF2 only")
        if self.c.ring is not ring:
            raise RingError("c must lie in the base ring")
        x = tuple(codes_of(self.x, ring))
        if len(x) != self.base.cols:
            raise DerivationError(f"X has length {len(x)}, code has length {self.base.cols}")
        object.__setattr__(self, "x", x)
        if not self.c.is_unit():
            raise DerivationError(f"c = {self.c} is not a unit")
        if inner(x, x) != BIT_ONE:
            raise DerivationError("<X, X> must equal 1")


def extend(spec: ExtensionSpec) -> RingMatrix:
    """Generator ``[(1, 0, X); (y_i, c*y_i, r_i)]`` with ``y_i = <r_i, X>``."""
    g = spec.base.entries
    x = np.array(spec.x, dtype=np.uint8)
    y = matmul_codes(g, x[:, None])[:, 0]
    cy = MUL[spec.c.code][y]
    top = np.concatenate([[BIT_ONE, 0], x]).astype(np.uint8)
    rest = np.column_stack([y, cy, g]).astype(np.uint8)
    return RingMatrix(spec.base.ring, np.vstack([top, rest]))


def binary_extend(code: BinaryCode, x) -> BinaryCode:
    """Binary extension with ``c = 1``."""
    base = RingMatrix(RingId.F2, code.generator)
    spec = ExtensionSpec(base, RingElem(RingId.F2, 1), tuple(int(b) for b in x))
    return BinaryCode(extend(spec).entries)


def full_neighbor_vector(suffix: str, zero_prefix: int = 0) -> np.ndarray:
    bits = [int(ch) for ch in suffix.strip() if ch in "01"]
    if len(bits) != len(suffix.strip()):
        raise DerivationError("neighbor vector must be a 0/1 string")
    return np.array([0] * zero_prefix + bits, dtype=np.uint8)


def neighbor(code: BinaryCode, x) -> BinaryCode:
    """``D = < <x>^perp  intersect  C, x >`` for an even-weight ``x`` outside ``C``."""
    x = np.asarray(x, dtype=np.uint8)
    if x.shape != (code.n,):
        raise DerivationError(f"x must have length {code.n}")
    if x.sum() % 2:
        raise DerivationError(
            "x has odd weight, so <x, x> = 1 and the neighbor cannot be self-orthogonal"
        )
    if code.contains(x):
        raise DerivationError("x lies in C; it does not define a proper neighbor")
    g = code.generator
    dots = (g.astype(np.int64) @ x.astype(np.int64)) & 1
    odd = np.flatnonzero(dots)
    if odd.size == 0:
        # x is orthogonal to all of C; with C self-dual this would put x in C
        raise DerivationError("x is orthogonal to C but not in it; C is not self-dual")
    pivot = g[odd[0]]
    kept = g.copy()
    kept[odd] ^= pivot
    kept = np.delete(kept, odd[0], axis=0)
    return BinaryCode(np.vstack([kept, x[None, :]]))


def neighbor_in_standard_coordinates(code: BinaryCode, x) -> BinaryCode:
    """Neighbor with ``x`` read in the coordinates of ``code``'s standard form.

    The result is returned in the original coordinates of ``code``.
    """
    _, perm = code.standard_form()
    x = np.asarray(x, dtype=np.uint8)
    raw = np.zeros_like(x)
    raw[perm] = x
    return neighbor(code, raw)
