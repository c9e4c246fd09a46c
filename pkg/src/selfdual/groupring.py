"""Finite abelian groups with frozen labelings, group rings, and the sigma map.

Group elements are addressed by their position in a fixed labeling
(position 0 is always the identity).  A group-ring element is the vector
of its coefficients in that order, so table vectors can be typed in
directly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import List, Sequence, Tuple

import numpy as np

from .rings import (
    BIT_ONE,
    BIT_W,
    INV,
    MUL,
    RingElem,
    RingError,
    RingId,
    codes_of,
    emit,
)


class GroupError(ValueError):
    pass


@dataclass(frozen=True)
class GroupSpec:
    """One of ``Cyclic(n)``, ``Product(m, n)`` or ``MixedCyclic(m, n)``.

    Labelings (0-based position ``k``):

    * ``Cyclic(n)``: ``k`` is ``x^k``.
    * ``Product(m, n)``: ``k = i + m*j`` is ``x^i y^j`` with ``|x| = m``, ``|y| = n``.
    * ``MixedCyclic(m, n)``: ``k = i + m*j`` is ``x^(n*i + j)`` in ``C_mn``.
    """

    kind: str
    m: int
    n: int = 1

    def __post_init__(self):
        if self.kind not in ("cyclic", "product", "mixed"):
            raise GroupError(f"unknown group kind {self.kind!r}")
        if self.m < 1 or self.n < 1:
            raise GroupError("group parameters must be positive")

    @classmethod
    def cyclic(cls, n: int) -> "GroupSpec":
        return cls("cyclic", n, 1)

    @classmethod
    def product(cls, m: int, n: int) -> "GroupSpec":
        return cls("product", m, n)

    @classmethod
    def mixed(cls, m: int, n: int) -> "GroupSpec":
        return cls("mixed", m, n)

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        """Parse ``C9``, ``C3xC5`` (direct product) or ``C3,3`` (mixed labeling)."""
        t = text.strip().replace(" ", "").replace("×", "x").replace("_", "")
        if mt := re.fullmatch(r"[Cc](\d+)", t):
            return cls.cyclic(int(mt[1]))
        if mt := re.fullmatch(r"[Cc](\d+)[xX*][Cc](\d+)", t):
            return cls.product(int(mt[1]), int(mt[2]))
        if mt := re.fullmatch(r"[Cc]\{?(\d+),(\d+)\}?", t):
            return cls.mixed(int(mt[1]), int(mt[2]))
        raise GroupError(f"cannot parse group literal {text!r}")

    @property
    def order(self) -> int:
        return self.m * self.n

    def __str__(self) -> str:
        if self.kind == "cyclic":
            return f"C{self.m}"
        if self.kind == "product":
            return f"C{self.m}xC{self.n}"
        return f"C{self.m},{self.n}"

    # element <-> position

    def _element(self, k: int):
        i, j = k % self.m, k // self.m
        if self.kind == "cyclic":
            return k
        if self.kind == "product":
            return (i, j)
        return (self.n * i + j) % (self.m * self.n)

    def _compose(self, a, b):
        if self.kind == "product":
            return ((a[0] + b[0]) % self.m, (a[1] + b[1]) % self.n)
        return (a + b) % self.order

    @cached_property
    def _tables(self) -> Tuple[np.ndarray, np.ndarray]:
        elems = [self._element(k) for k in range(self.order)]
        pos = {e: k for k, e in enumerate(elems)}
        if len(pos) != self.order:
            raise GroupError(f"labeling of {self} is not a bijection")
        mult = np.array(
            [[pos[self._compose(a, b)] for b in elems] for a in elems], dtype=np.intp
        )
        inv = np.array([int(np.flatnonzero(row == 0)[0]) for row in mult], dtype=np.intp)
        return mult, inv

    @property
    def mult_table(self) -> np.ndarray:
        """``mult_table[i, j]`` is the position of ``g_i g_j``."""
        return self._tables[0]

    @property
    def inverse(self) -> np.ndarray:
        return self._tables[1]

    @cached_property
    def sigma_index(self) -> np.ndarray:
        """``sigma_index[i, j]`` is the position of ``g_i^-1 g_j``."""
        mult, inv = self._tables
        return mult[inv]


@dataclass(frozen=True)
class RingMatrix:
    ring: RingId
    entries: np.ndarray = field(repr=False)

    def __post_init__(self):
        a = np.asarray(self.entries, dtype=np.uint8)
        if a.ndim != 2:
            raise ValueError("RingMatrix entries must be two-dimensional")
        if np.any(a & ~np.uint8(self.ring.mask)):
            raise RingError(f"entries outside {self.ring.value}")
        a = a.copy()
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @classmethod
    def zeros(cls, ring: RingId, rows: int, cols: int) -> "RingMatrix":
        return cls(ring, np.zeros((rows, cols), dtype=np.uint8))

    @classmethod
    def identity(cls, ring: RingId, n: int) -> "RingMatrix":
        return cls(ring, np.eye(n, dtype=np.uint8))

    @property
    def shape(self) -> Tuple[int, int]:
        return self.entries.shape

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def T(self) -> "RingMatrix":
        return RingMatrix(self.ring, self.entries.T)

    def __getitem__(self, idx) -> RingElem:
        return RingElem(self.ring, int(self.entries[idx]))

    def __add__(self, other: "RingMatrix") -> "RingMatrix":
        self._check(other)
        return RingMatrix(self.ring, self.entries ^ other.entries)

    def __matmul__(self, other: "RingMatrix") -> "RingMatrix":
        self._check(other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return RingMatrix(self.ring, matmul_codes(self.entries, other.entries))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RingMatrix)
            and self.ring is other.ring
            and self.shape == other.shape
            and bool(np.array_equal(self.entries, other.entries))
        )

    def __hash__(self):
        return hash((self.ring, self.entries.tobytes(), self.shape))

    def is_zero(self) -> bool:
        return not self.entries.any()

    def _check(self, other: "RingMatrix") -> None:
        if other.ring is not self.ring:
            raise RingError(f"ring mismatch: {self.ring.value} vs {other.ring.value}")

    def to_text(self) -> str:
        return "\n".join(emit(row, self.ring, sep=" ") for row in self.entries)


def matmul_codes(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product of 4-bit code arrays under the shared ring tables."""
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.uint8)
    for k in range(a.shape[1]):
        out ^= MUL[a[:, k][:, None], b[k][None, :]]
    return out


def field_rank(a: np.ndarray) -> int:
    """Rank of a matrix over F2 or F4 (codes with bits in ``{w, 1}`` only)."""
    m = np.array(a, dtype=np.uint8)
    rows, cols = m.shape
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i, c]), None)
        if piv is None:
            continue
        m[[r, piv]] = m[[piv, r]]
        m[r] = MUL[INV[int(m[r, c])], m[r]]
        for i in range(rows):
            if i != r and m[i, c]:
                m[i] ^= MUL[int(m[i, c]), m[r]]
        r += 1
        if r == rows:
            break
    return r


def is_invertible(mat: RingMatrix) -> bool:
    """Invertibility over the coefficient ring.

    Over the local rings F2+uF2 and F4+uF4 a square matrix is invertible
    exactly when its reduction modulo ``u`` is invertible over the residue
    field.
    """
    if mat.rows != mat.cols:
        return False
    residue = mat.entries & np.uint8(BIT_ONE | BIT_W)
    return field_rank(residue) == mat.rows


@dataclass(frozen=True)
class GroupRingElem:
    group: GroupSpec
    ring: RingId
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        c = tuple(codes_of(self.coeffs, self.ring))
        if len(c) != self.group.order:
            raise GroupError(
                f"{self.group} needs {self.group.order} coefficients, got {len(c)}"
            )
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_text(cls, group: GroupSpec, ring: RingId, text: str) -> "GroupRingElem":
        return cls(group, ring, tuple(codes_of(text, ring)))

    @classmethod
    def zero(cls, group: GroupSpec, ring: RingId) -> "GroupRingElem":
        return cls(group, ring, (0,) * group.order)

    @classmethod
    def identity(cls, group: GroupSpec, ring: RingId) -> "GroupRingElem":
        return cls(group, ring, (BIT_ONE,) + (0,) * (group.order - 1))

    def coeff(self, k: int) -> RingElem:
        return RingElem(self.ring, self.coeffs[k])

    def _check(self, other: "GroupRingElem") -> None:
        if other.group != self.group:
            raise GroupError(f"group mismatch: {self.group} vs {other.group}")
        if other.ring is not self.ring:
            raise RingError(f"ring mismatch: {self.ring.value} vs {other.ring.value}")

    def __add__(self, other: "GroupRingElem") -> "GroupRingElem":
        self._check(other)
        return GroupRingElem(
            self.group, self.ring, tuple(a ^ b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __mul__(self, other: "GroupRingElem") -> "GroupRingElem":
        self._check(other)
        mult = self.group.mult_table
        out = [0] * self.group.order
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[mult[i, j]] ^= int(MUL[a, b])
        return GroupRingElem(self.group, self.ring, tuple(out))

    def scale(self, r: RingElem) -> "GroupRingElem":
        if r.ring is not self.ring:
            raise RingError("ring mismatch")
        return GroupRingElem(self.group, self.ring, tuple(int(MUL[r.code, a]) for a in self.coeffs))

    def star(self) -> "GroupRingElem":
        inv = self.group.inverse
        return GroupRingElem(
            self.group, self.ring, tuple(self.coeffs[inv[k]] for k in range(self.group.order))
        )

    def augmentation(self) -> RingElem:
        """Sum of all coefficients."""
        s = 0
        for a in self.coeffs:
            s ^= a
        return RingElem(self.ring, s)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self) -> str:
        return "(" + emit(self.coeffs, self.ring) + ")"


def gr_add(v: GroupRingElem, w: GroupRingElem) -> GroupRingElem:
    return v + w


def gr_mul(v: GroupRingElem, w: GroupRingElem) -> GroupRingElem:
    return v * w


def involution(v: GroupRingElem) -> GroupRingElem:
    return v.star()


def gr_hat(group: GroupSpec, ring: RingId) -> GroupRingElem:
    return GroupRingElem(group, ring, (BIT_ONE,) * group.order)


def sigma(v: GroupRingElem) -> RingMatrix:
    """The matrix ``(alpha_{g_i^-1 g_j})`` of ``v``."""
    coeffs = np.array(v.coeffs, dtype=np.uint8)
    return RingMatrix(v.ring, coeffs[v.group.sigma_index])


def is_gr_unit(v: GroupRingElem) -> bool:
    return is_invertible(sigma(v))


def is_unitary_unit(v: GroupRingElem) -> bool:
    return v * v.star() == GroupRingElem.identity(v.group, v.ring)


# closed forms, kept as an independent cross-check of ``sigma``

def circ(values: Sequence[int]) -> np.ndarray:
    """``circ(a_1..a_n)``: row ``r`` is the first row shifted right ``r`` times."""
    v = np.asarray(values, dtype=np.uint8)
    return np.stack([np.roll(v, r) for r in range(len(v))])


def block_circ(blocks: List[np.ndarray]) -> np.ndarray:
    n = len(blocks)
    return np.block([[blocks[(c - r) % n] for c in range(n)] for r in range(n)])


def sigma_closed_form(v: GroupRingElem) -> RingMatrix:
    g, a = v.group, list(v.coeffs)
    if g.kind == "cyclic":
        return RingMatrix(v.ring, circ(a))
    m, n = g.m, g.n
    chunks = [a[m * j: m * j + m] for j in range(n)]
    blocks = [circ(c) for c in chunks]
    if g.kind == "product":
        return RingMatrix(v.ring, block_circ(blocks))
    primed = [circ([c[-1]] + c[:-1]) for c in chunks]
    rows = []
    for r in range(n):
        rows.append([blocks[c - r] if c >= r else primed[n + c - r] for c in range(n)])
    return RingMatrix(v.ring, np.block(rows))
