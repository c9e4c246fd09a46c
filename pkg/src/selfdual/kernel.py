"""Selects the compiled enumeration kernel, or the Python fallback.

Set ``SELFDUAL_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import _enum_py

if os.environ.get("SELFDUAL_PURE_PYTHON"):
    _impl = _enum_py
else:
    try:
        from . import _enum as _impl
    except ImportError:  # extension not built
        _impl = _enum_py

COMPILED = _impl.COMPILED
BACKENDS = {"python": _enum_py}
if COMPILED:
    BACKENDS["compiled"] = _impl


def default_workers() -> int:
    return max(1, int(os.environ.get("SELFDUAL_WORKERS", "1")))


def pack_rows(bits: np.ndarray) -> np.ndarray:
    """Pack a 0/1 matrix into ``(rows, words)`` uint64, bit ``j`` of word ``j // 64``."""
    bits = np.asarray(bits, dtype=np.uint8)
    k, n = bits.shape
    nw = max(1, (n + 63) // 64)
    padded = np.zeros((k, nw * 64), dtype=np.uint8)
    padded[:, :n] = bits
    packed = np.packbits(padded.reshape(k, nw, 64), axis=-1, bitorder="little")
    return np.ascontiguousarray(packed.view(np.uint64).reshape(k, nw))


def level_histogram(rows, t, maxw, workers=None, backend=None):
    """Weight histogram of all XORs of exactly ``t`` distinct rows.

    Work is split by the smallest chosen row index; partial histograms are
    merged by integer addition, so the result does not depend on
    ``workers``.
    """
    impl = BACKENDS[backend] if backend else _impl
    rows = np.ascontiguousarray(rows, dtype=np.uint64)
    k = rows.shape[0]
    workers = workers or default_workers()
    if workers <= 1 or t <= 1 or k - t + 1 <= 1:
        return impl.level_histogram(rows, t, maxw)
    firsts = list(range(0, k - t + 1))
    # round-robin keeps the expensive small leading indices spread out
    slices = [firsts[w::workers] for w in range(workers)]

    def run(chunk):
        h = np.zeros(maxw + 1, dtype=np.int64)
        for f in chunk:
            h += impl.level_histogram(rows, t, maxw, f, f + 1)
        return h

    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(run, [s for s in slices if s]))
    return np.sum(parts, axis=0, dtype=np.int64)
