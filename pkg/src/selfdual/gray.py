"""Gray maps from the four alphabets down to F2.

Vectors are numpy arrays of 4-bit ring codes.  Every map writes its two
output halves as consecutive blocks (``layout="block"``); the alternative
``layout="interleave"`` pairs the two images of each coordinate.  Both
give equivalent codes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from .groupring import RingMatrix
from .rings import BIT_ONE, BIT_U, BIT_UW, BIT_W, MUL, RingId

LAYOUTS = ("block", "interleave")


def _join(first: np.ndarray, second: np.ndarray, layout: str) -> np.ndarray:
    if layout == "block":
        return np.concatenate([first, second], axis=-1)
    if layout == "interleave":
        out = np.empty(first.shape[:-1] + (2 * first.shape[-1],), dtype=first.dtype)
        out[..., 0::2] = first
        out[..., 1::2] = second
        return out
    raise ValueError(f"unknown layout {layout!r}")


def _codes(vec) -> np.ndarray:
    return np.asarray(vec, dtype=np.uint8)


def phi1(vec, layout: str = "block") -> np.ndarray:
    """F2+uF2 -> F2: ``a + b*u -> (b, a + b)``."""
    v = _codes(vec)
    a = v & 1
    b = (v >> 1) & 1
    return _join(b, a ^ b, layout)


def psi_f4(vec, layout: str = "block") -> np.ndarray:
    """F4 -> F2: ``a*w + b*wbar -> (a, b)``."""
    v = _codes(vec)
    p = v & 1
    q = (v >> 2) & 1
    return _join(p ^ q, p, layout)


def psi_f4u(vec, layout: str = "block") -> np.ndarray:
    """F4+uF4 -> F2+uF2: ``a*w + b*wbar -> (a, b)`` with ``a, b`` in F2+uF2."""
    v = _codes(vec)
    p = v & 0b0011
    q = (v >> 2) & 0b0011
    return _join(p ^ q, p, layout)


def phi_f4u(vec, layout: str = "block") -> np.ndarray:
    """F4+uF4 -> F4: ``a + b*u -> (b, a + b)`` with ``a, b`` in F4."""
    v = _codes(vec)
    a = v & (BIT_ONE | BIT_W)
    b = ((v & BIT_U) >> 1) | ((v & BIT_UW) >> 1)
    return _join(b, a ^ b, layout)


#: F2-basis of each ring; multiplying generator rows by these spans the binary image.
F2_BASIS = {
    RingId.F2: (BIT_ONE,),
    RingId.F2U: (BIT_ONE, BIT_U),
    RingId.F4: (BIT_ONE, BIT_W),
    RingId.F4U: (BIT_ONE, BIT_W, BIT_U, BIT_UW),
}

EXPANSION = {RingId.F2: 1, RingId.F2U: 2, RingId.F4: 2, RingId.F4U: 4}


@dataclass(frozen=True)
class GrayChain:
    """Stages applied in order, ending at F2."""

    source: RingId
    stages: Tuple[str, ...]

    @property
    def expansion(self) -> int:
        return 2 ** len(self.stages)

    def apply(self, vec, layout: str = "block") -> np.ndarray:
        out = _codes(vec)
        for stage in self.stages:
            out = _STAGES[stage](out, layout)
        return out


_STAGES = {"phi1": phi1, "psi_f4": psi_f4, "psi_f4u": psi_f4u, "phi_f4u": phi_f4u}

CHAINS = {
    RingId.F2: GrayChain(RingId.F2, ()),
    RingId.F2U: GrayChain(RingId.F2U, ("phi1",)),
    RingId.F4: GrayChain(RingId.F4, ("psi_f4",)),
    RingId.F4U: GrayChain(RingId.F4U, ("psi_f4u", "phi1")),
}

#: the other composition for F4+uF4, used only to cross-check weights
ALT_F4U_CHAIN = GrayChain(RingId.F4U, ("phi_f4u", "psi_f4"))


def chain_for(ring: RingId, alternate: bool = False) -> GrayChain:
    if alternate:
        if ring is not RingId.F4U:
            raise ValueError("the alternate Gray chain exists only for F4+uF4")
        return ALT_F4U_CHAIN
    return CHAINS[ring]


def lee_weight(vec, ring: RingId) -> int:
    return int(chain_for(ring).apply(vec).sum())


def span_rows(gen: np.ndarray, ring: RingId) -> np.ndarray:
    """Rows ``r * g`` for each generator row ``g`` and each F2-basis element ``r``."""
    g = _codes(gen)
    return np.concatenate([MUL[r][g] for r in F2_BASIS[ring]], axis=0)


def image_rows(gen: RingMatrix, chain: GrayChain | None = None, layout: str = "block") -> np.ndarray:
    """Binary rows spanning the Gray image of the code generated by ``gen``."""
    if chain is None:
        chain = CHAINS[gen.ring]
    if chain.source is not gen.ring:
        raise ValueError(f"chain for {chain.source.value} applied to {gen.ring.value} matrix")
    return chain.apply(span_rows(gen.entries, gen.ring), layout)


def binary_image(gen: RingMatrix, chain: GrayChain | None = None, layout: str = "block"):
    """Binary code spanned by the Gray image of ``gen``."""
    from .bincode import BinaryCode

    return BinaryCode(image_rows(gen, chain, layout))


def ring_image(gen: RingMatrix, layout: str = "block") -> RingMatrix:
    """``psi`` image of an F4+uF4 generator as an F2+uF2 generator."""
    if gen.ring is not RingId.F4U:
        raise ValueError("ring_image expects an F4+uF4 generator")
    # over F2+uF2 only the multiples by 1 and w are needed
    rows = np.concatenate([gen.entries, MUL[BIT_W][gen.entries]], axis=0)
    return RingMatrix(RingId.F2U, psi_f4u(rows, layout))
