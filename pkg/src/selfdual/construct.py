"""The bordered four-block generator ``[I | A B ; B^T A^T]`` and its checks."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from .groupring import (
    GroupRingElem,
    GroupSpec,
    RingMatrix,
    gr_hat,
    is_gr_unit,
    is_unitary_unit,
    matmul_codes,
    sigma,
)
from .rings import MUL, RingElem, RingError, RingId, codes_of, emit


class ConstructionError(ValueError):
    pass


@dataclass(frozen=True)
class ConstructionParams:
    group: GroupSpec
    ring: RingId
    gamma: Tuple[int, int, int, int]
    v1: GroupRingElem
    v2: GroupRingElem

    def __post_init__(self):
        g = tuple(codes_of(self.gamma, self.ring))
        if len(g) != 4:
            raise ConstructionError("gamma must have four entries")
        object.__setattr__(self, "gamma", g)
        for v in (self.v1, self.v2):
            if v.group != self.group or v.ring is not self.ring:
                raise ConstructionError("v1 and v2 must live in the same group ring")
        if self.group.order % 2 == 0:
            raise ConstructionError(f"group order must be odd, got {self.group.order}")
        if self.group.order < 3:
            raise ConstructionError("group order must be at least 3")

    @classmethod
    def from_text(
        cls,
        group: str,
        ring: str,
        g12: str,
        v1: str,
        g34: str,
        v2: str,
    ) -> "ConstructionParams":
        """Build params from the column layout of a construction table row."""
        grp = GroupSpec.parse(group) if isinstance(group, str) else group
        rid = RingId.parse(ring) if isinstance(ring, str) else ring
        gamma = codes_of(g12, rid) + codes_of(g34, rid)
        return cls(
            grp,
            rid,
            tuple(gamma),
            GroupRingElem.from_text(grp, rid, v1),
            GroupRingElem.from_text(grp, rid, v2),
        )

    @property
    def p(self) -> int:
        return self.group.order

    def gamma_elem(self, i: int) -> RingElem:
        return RingElem(self.ring, self.gamma[i - 1])

    def describe(self) -> dict:
        r = self.ring
        return {
            "group": str(self.group),
            "ring": r.value,
            "gamma": emit(self.gamma, r),
            "v1": emit(self.v1.coeffs, r),
            "v2": emit(self.v2.coeffs, r),
        }


def bordered(corner: int, border: int, inner: np.ndarray) -> np.ndarray:
    p = inner.shape[0]
    out = np.empty((p + 1, p + 1), dtype=np.uint8)
    out[0, 0] = corner
    out[0, 1:] = border
    out[1:, 0] = border
    out[1:, 1:] = inner
    return out


def build_generator(params: ConstructionParams) -> RingMatrix:
    """The ``(2p+2) x (4p+4)`` matrix ``[I | A B ; B^T A^T]``."""
    g1, g2, g3, g4 = params.gamma
    a = bordered(g1, g2, sigma(params.v1).entries)
    b = bordered(g3, g4, sigma(params.v2).entries)
    right = np.block([[a, b], [b.T, a.T]])
    n2 = right.shape[0]
    return RingMatrix(params.ring, np.hstack([np.eye(n2, dtype=np.uint8), right]))


@dataclass(frozen=True)
class ConditionReport:
    c1: bool
    c2: bool
    c3: bool
    c4: bool
    c5: bool
    delta1: RingElem
    delta2: RingElem

    @property
    def all(self) -> bool:
        return self.c1 and self.c2 and self.c3 and self.c4 and self.c5

    def as_dict(self) -> dict:
        return {
            "c1": self.c1, "c2": self.c2, "c3": self.c3, "c4": self.c4, "c5": self.c5,
            "delta1": str(self.delta1), "delta2": str(self.delta2),
        }


def check_conditions(params: ConstructionParams) -> ConditionReport:
    v1, v2 = params.v1, params.v2
    gam = [params.gamma_elem(i) for i in range(1, 5)]
    sq = [g * g for g in gam]
    c1 = v1 * v2 == v2 * v1
    c2 = (sq[0] + sq[1] + sq[2] + sq[3]).code == 1
    s = gam[1] + gam[3]
    hat = gr_hat(params.group, params.ring).scale(s * s)
    one = GroupRingElem.identity(params.group, params.ring)
    c3 = (v1 * v1.star() + v2 * v2.star() + hat + one).is_zero()
    c4 = (v1.star() * v1 + v2.star() * v2 + hat + one).is_zero()
    d1, d2 = v1.augmentation(), v2.augmentation()
    c5 = gam[0] == d1 and gam[2] == d2
    return ConditionReport(c1, c2, c3, c4, c5, d1, d2)


def gram(gen: RingMatrix) -> RingMatrix:
    e = gen.entries
    return RingMatrix(gen.ring, matmul_codes(e, e.T))


def has_identity_prefix(gen: RingMatrix) -> bool:
    k = gen.rows
    return gen.cols >= k and np.array_equal(gen.entries[:, :k], np.eye(k, dtype=np.uint8))


def is_self_dual_over_ring(gen: RingMatrix) -> bool:
    """Self-duality of the code generated by ``[I | R]`` with ``n = 2k``.

    Free rank ``n/2`` plus ``G G^T = 0`` gives ``C = C^perp`` because
    ``|C| |C^perp| = |R|^n`` over a Frobenius ring.
    """
    if not has_identity_prefix(gen) or gen.cols != 2 * gen.rows:
        raise ConstructionError(f"unsupported generator shape {gen.shape}: expected [I_k | R] with n = 2k")
    return gram(gen).is_zero()


class Screen(enum.Enum):
    CONSISTENT = "consistent"
    CANNOT_BE_SELF_DUAL = "cannot be self-dual"


def screen_target(params: ConstructionParams) -> GroupRingElem:
    """The value ``v1* v1 + v2* v2`` must take for a self-dual candidate.

    It is ``1 + (gamma2 + gamma4)^2 * ghat``: the identity when
    ``gamma2 + gamma4`` is a non-unit, and the non-unit ``1 + ghat`` otherwise.
    """
    s = params.gamma_elem(2) + params.gamma_elem(4)
    hat = gr_hat(params.group, params.ring).scale(s * s)
    return GroupRingElem.identity(params.group, params.ring) + hat


def norm_screen(params: ConstructionParams) -> Screen:
    """Cheap necessary test for self-duality, used to prune searches.

    A CONSISTENT verdict proves nothing; the full check still has to run.
    """
    v1, v2 = params.v1, params.v2
    if v1.star() * v1 + v2.star() * v2 != screen_target(params):
        return Screen.CANNOT_BE_SELF_DUAL
    return Screen.CONSISTENT


def unitary_split(params: ConstructionParams) -> bool:
    """True when one of v1, v2 is a unitary unit and the other a non-unit.

    Informational only. Self-dual candidates exist where this is False, for
    example over F2[C3] with v1 = ghat, v2 = 1 + x and gamma = (1, 0, 0, 0).
    """
    v1, v2 = params.v1, params.v2
    u1, u2 = is_unitary_unit(v1), is_unitary_unit(v2)
    n1, n2 = not is_gr_unit(v1), not is_gr_unit(v2)
    return (u1 and n2) or (u2 and n1)
