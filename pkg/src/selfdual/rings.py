"""Exact arithmetic over F2, F2+uF2, F4 and F4+uF4.

Every element is stored as a 4-bit code over F2 in the ordered basis
``{u*w, w, u, 1}`` (most significant bit first), so hex digit ``9`` is
``1 + u*w`` and ``C`` is ``w + u*w``.  The three smaller rings are the
subrings that leave the unused slots at zero, which lets one 16x16
multiplication table serve all four alphabets.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, List, Sequence

import numpy as np

BIT_ONE = 0b0001
BIT_U = 0b0010
BIT_W = 0b0100
BIT_UW = 0b1000


class RingError(ValueError):
    """Raised on mixed-ring arithmetic or an element outside its ring."""


class ParseError(ValueError):
    """Raised when a shorthand token is not valid for the requested ring."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class RingId(enum.Enum):
    F2 = "F2"
    F2U = "F2U"
    F4 = "F4"
    F4U = "F4U"

    @property
    def mask(self) -> int:
        return _MASKS[self]

    @property
    def size(self) -> int:
        return 1 << bin(self.mask).count("1")

    @property
    def has_u(self) -> bool:
        return self in (RingId.F2U, RingId.F4U)

    def codes(self) -> List[int]:
        """All 4-bit codes belonging to this ring, in increasing order."""
        return [c for c in range(16) if c & ~self.mask == 0]

    def elements(self) -> List["RingElem"]:
        return [RingElem(self, c) for c in self.codes()]

    @classmethod
    def parse(cls, text: str) -> "RingId":
        key = text.strip().upper().replace("+", "").replace(" ", "")
        aliases = {
            "F2": cls.F2, "GF2": cls.F2,
            "F2U": cls.F2U, "F2UF2": cls.F2U, "R1": cls.F2U,
            "F4": cls.F4, "GF4": cls.F4,
            "F4U": cls.F4U, "F4UF4": cls.F4U,
        }
        try:
            return aliases[key]
        except KeyError:
            raise RingError(f"unknown ring {text!r}") from None


_MASKS = {
    RingId.F2: BIT_ONE,
    RingId.F2U: BIT_ONE | BIT_U,
    RingId.F4: BIT_ONE | BIT_W,
    RingId.F4U: 0b1111,
}


def _mul_code(a: int, b: int) -> int:
    # a = p + q*w with p, q in F2[u]/(u^2); coefficients as (const, u) bit pairs
    def split(x):
        return (x & 1, (x >> 1) & 1), ((x >> 2) & 1, (x >> 3) & 1)

    def m2(x, y):  # product in F2[u]/(u^2)
        return (x[0] & y[0], (x[0] & y[1]) ^ (x[1] & y[0]))

    def a2(x, y):
        return (x[0] ^ y[0], x[1] ^ y[1])

    (p1, q1), (p2, q2) = split(a), split(b)
    pp = m2(p1, p2)
    qq = m2(q1, q2)  # coefficient of w^2 = w + 1
    cross = a2(m2(p1, q2), m2(q1, p2))
    const = a2(pp, qq)
    wcoef = a2(cross, qq)
    return const[0] | (const[1] << 1) | (wcoef[0] << 2) | (wcoef[1] << 3)


#: MUL[a, b] is the product of two 4-bit codes.
MUL = np.array([[_mul_code(a, b) for b in range(16)] for a in range(16)], dtype=np.uint8)
MUL.setflags(write=False)


def mul_codes(a: int, b: int) -> int:
    return int(MUL[a, b])


def is_unit_code(a: int) -> bool:
    # units are exactly the codes with nonzero image modulo u
    return bool(a & (BIT_ONE | BIT_W))


def _inverse_table() -> List[int]:
    inv = [-1] * 16
    for a in range(16):
        for b in range(16):
            if MUL[a, b] == BIT_ONE:
                inv[a] = b
    return inv


INV = _inverse_table()


def inv_code(a: int) -> int:
    if INV[a] < 0:
        raise RingError(f"code {a:X} is not a unit")
    return INV[a]


@dataclass(frozen=True)
class RingElem:
    ring: RingId
    code: int

    def __post_init__(self):
        if not 0 <= self.code < 16 or self.code & ~self.ring.mask:
            raise RingError(f"code {self.code:#x} is not an element of {self.ring.value}")

    def _check(self, other: "RingElem") -> None:
        if not isinstance(other, RingElem):
            raise TypeError(f"expected RingElem, got {type(other).__name__}")
        if other.ring is not self.ring:
            raise RingError(f"ring mismatch: {self.ring.value} vs {other.ring.value}")

    def __add__(self, other: "RingElem") -> "RingElem":
        self._check(other)
        return RingElem(self.ring, self.code ^ other.code)

    __sub__ = __add__

    def __mul__(self, other: "RingElem") -> "RingElem":
        self._check(other)
        return RingElem(self.ring, mul_codes(self.code, other.code))

    def __neg__(self) -> "RingElem":
        return self

    def __bool__(self) -> bool:
        return self.code != 0

    def is_unit(self) -> bool:
        return is_unit_code(self.code)

    def inverse(self) -> "RingElem":
        return RingElem(self.ring, inv_code(self.code))

    def __str__(self) -> str:
        return emit_token(self.code, self.ring)

    def __repr__(self) -> str:
        return f"RingElem({self.ring.value}, {emit_token(self.code, self.ring)!r})"


def zero(ring: RingId) -> RingElem:
    return RingElem(ring, 0)


def one(ring: RingId) -> RingElem:
    return RingElem(ring, BIT_ONE)


def add(a: RingElem, b: RingElem) -> RingElem:
    return a + b


def mul(a: RingElem, b: RingElem) -> RingElem:
    return a * b


def is_unit(a: RingElem) -> bool:
    return a.is_unit()


def w_decompose(code: int) -> tuple:
    """Write ``code`` as ``a*w + b*wbar`` with ``a, b`` in F2+uF2.

    ``wbar = 1 + w``, so ``p + q*w = b + (a + b)*w`` gives ``b = p`` and
    ``a = p + q``.  Returned values are F2+uF2 codes (bits ``{u, 1}``).
    """
    p = code & 0b0011
    q = (code >> 2) & 0b0011
    return p ^ q, p


# shorthand codecs

_F4_TOKENS = {
    "0": 0, "1": BIT_ONE,
    "w": BIT_W, "ω": BIT_W,
    "w+1": BIT_W | BIT_ONE, "ω+1": BIT_W | BIT_ONE,
    "1+w": BIT_W | BIT_ONE, "1+ω": BIT_W | BIT_ONE,
    "wbar": BIT_W | BIT_ONE, "ω̄": BIT_W | BIT_ONE,
}
_F2U_TOKENS = {"0": 0, "1": BIT_ONE, "u": BIT_U, "3": BIT_ONE | BIT_U,
               "1+u": BIT_ONE | BIT_U, "u+1": BIT_ONE | BIT_U}


def emit_token(code: int, ring: RingId) -> str:
    if ring is RingId.F4U:
        return f"{code:X}"
    if ring is RingId.F2U:
        return {0: "0", 1: "1", 2: "u", 3: "3"}[code]
    if ring is RingId.F4:
        return {0: "0", 1: "1", 4: "w", 5: "w+1"}[code]
    return str(code)


def emit(elems: Iterable, ring: RingId, sep: str = ",") -> str:
    """Render a vector in shorthand; accepts RingElem values or raw codes."""
    codes = [e.code if isinstance(e, RingElem) else int(e) for e in elems]
    return sep.join(emit_token(c, ring) for c in codes)


_SPLIT = re.compile(r"[\s,;]+")
_SEP = re.compile(r"\s*[,;]\s*")


def _tokenize(text: str, ring: RingId) -> List[str]:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    text = text.strip()
    if not text:
        return []
    if _SPLIT.search(text):
        # explicit separators must each delimit a token, so ",," is an error
        parts = _SEP.split(text) if _SEP.search(text) else text.split()
        if any(p == "" for p in parts):
            raise ParseError("empty coordinate", [i for i, p in enumerate(parts) if p == ""][0])
        return parts
    if ring is RingId.F4:
        # compact F4 literals only make sense for single-character tokens
        return re.findall(r"w\+1|ω\+1|ω̄|.", text)
    return list(text)


def parse_token(tok: str, ring: RingId, position: int = 0) -> int:
    t = tok.strip()
    if ring is RingId.F4U:
        if len(t) == 1 and t.upper() in "0123456789ABCDEF":
            return int(t, 16)
    elif ring is RingId.F2U:
        if t in _F2U_TOKENS:
            return _F2U_TOKENS[t]
    elif ring is RingId.F4:
        if t in _F4_TOKENS:
            return _F4_TOKENS[t]
    elif t in ("0", "1"):
        return int(t)
    raise ParseError(f"invalid token {tok!r} for ring {ring.value}", position)


def parse_codes(text: str, ring: RingId) -> List[int]:
    """Parse a shorthand vector literal into 4-bit codes.

    Both compact (``1300u3``) and separated (``(1,3,0,0,u,3)``) forms are
    accepted.
    """
    return [parse_token(t, ring, i) for i, t in enumerate(_tokenize(text, ring))]


def parse_shorthand(text: str, ring: RingId) -> List[RingElem]:
    return [RingElem(ring, c) for c in parse_codes(text, ring)]


def codes_of(values: Sequence, ring: RingId) -> List[int]:
    """Normalise a vector given as text, RingElems or raw codes."""
    if isinstance(values, str):
        return parse_codes(values, ring)
    out = []
    for v in values:
        c = v.code if isinstance(v, RingElem) else int(v)
        if c & ~ring.mask:
            raise RingError(f"code {c:#x} is not an element of {ring.value}")
        out.append(c)
    return out
