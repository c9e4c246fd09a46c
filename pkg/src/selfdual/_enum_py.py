"""Pure-Python fallback for the low-weight enumeration kernel.

Same contract as the compiled ``_enum`` module.  The innermost combination
level is vectorised with numpy; everything above it is a plain Python
walk with cached partial XORs.
"""

from __future__ import annotations

import numpy as np

COMPILED = False


def _popcount(words: np.ndarray) -> np.ndarray:
    return np.bitwise_count(words).sum(axis=-1, dtype=np.int64)


def level_histogram(rows, t, maxw, lo=0, hi=None):
    """Histogram of ``popcount(xor of t rows)`` over all ``t``-subsets.

    Only subsets whose smallest row index lies in ``[lo, hi)`` are visited.
    ``rows`` is a ``(k, words)`` uint64 array; weights above ``maxw`` are
    dropped.
    """
    rows = np.ascontiguousarray(rows, dtype=np.uint64)
    k = rows.shape[0]
    hist = np.zeros(maxw + 1, dtype=np.int64)
    if hi is None or hi > k:
        hi = k
    if t == 0:
        if lo == 0:
            hist[0] += 1
        return hist
    if t > k:
        return hist
    weights = _popcount(rows)

    def tally(ws):
        ws = ws[ws <= maxw]
        if ws.size:
            hist[:] += np.bincount(ws, minlength=maxw + 1)[: maxw + 1]

    if t == 1:
        tally(weights[lo:hi])
        return hist

    def walk(acc, start, depth):
        # depth rows still to choose, from indices >= start
        if depth == 1:
            tally(_popcount(rows[start:] ^ acc))
            return
        for j in range(start, k - depth + 1):
            walk(acc ^ rows[j], j + 1, depth - 1)

    for first in range(lo, min(hi, k - t + 1)):
        walk(rows[first].copy(), first + 1, t - 1)
    return hist
