# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled low-weight enumeration kernel.

Walks all t-subsets of the rows in lexicographic order keeping one partial
XOR per depth, so each visited subset costs one XOR and one popcount per
machine word.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free

cnp.import_array()

COMPILED = True


cdef extern from *:
    """
    static inline int sd_popcount64(unsigned long long x) {
        return __builtin_popcountll(x);
    }
    """
    int sd_popcount64(unsigned long long x) nogil


cdef inline int _weight(const uint64_t* v, int nw) noexcept nogil:
    cdef int s = 0
    cdef int w
    for w in range(nw):
        s += sd_popcount64(v[w])
    return s


cdef int _walk(const uint64_t* rows, int k, int nw, int t, int first,
               int64_t* hist, int maxw) noexcept nogil:
    cdef int* idx = <int*> malloc(t * sizeof(int))
    cdef uint64_t* acc = <uint64_t*> malloc(t * nw * sizeof(uint64_t))
    cdef uint64_t* top
    cdef uint64_t* cur
    cdef const uint64_t* row
    cdef int level, w, j, s, last
    if idx == NULL or acc == NULL:
        free(idx)
        free(acc)
        return -1
    for w in range(nw):
        acc[w] = rows[first * nw + w]
    idx[0] = first
    if t == 1:
        s = _weight(acc, nw)
        if s <= maxw:
            hist[s] += 1
        free(idx)
        free(acc)
        return 0
    level = 1
    idx[1] = first
    last = t - 1
    while level > 0:
        if level == last:
            # innermost depth: tight loop over the final row
            top = acc + (level - 1) * nw
            if nw == 1:
                for j in range(idx[level - 1] + 1, k):
                    s = sd_popcount64(top[0] ^ rows[j])
                    if s <= maxw:
                        hist[s] += 1
            else:
                for j in range(idx[level - 1] + 1, k):
                    row = rows + j * nw
                    s = 0
                    for w in range(nw):
                        s += sd_popcount64(top[w] ^ row[w])
                    if s <= maxw:
                        hist[s] += 1
            level -= 1
            continue
        idx[level] += 1
        if idx[level] > k - (t - level):
            level -= 1
            continue
        top = acc + (level - 1) * nw
        cur = acc + level * nw
        row = rows + idx[level] * nw
        for w in range(nw):
            cur[w] = top[w] ^ row[w]
        level += 1
        idx[level] = idx[level - 1]
    free(idx)
    free(acc)
    return 0


def level_histogram(rows, int t, int maxw, int lo=0, hi=None):
    """Histogram of ``popcount(xor of t rows)`` over all ``t``-subsets.

    Only subsets whose smallest row index lies in ``[lo, hi)`` are visited.
    ``rows`` is a ``(k, words)`` uint64 array; weights above ``maxw`` are
    dropped.  Releases the GIL while walking.
    """
    cdef cnp.ndarray[cnp.uint64_t, ndim=2, mode="c"] r = np.ascontiguousarray(rows, dtype=np.uint64)
    cdef int k = r.shape[0]
    cdef int nw = r.shape[1]
    cdef cnp.ndarray[cnp.int64_t, ndim=1, mode="c"] hist = np.zeros(maxw + 1, dtype=np.int64)
    cdef int h = k if hi is None or hi > k else hi
    cdef int first, status = 0
    cdef const uint64_t* rp
    cdef int64_t* hp = <int64_t*> hist.data
    if t == 0:
        if lo == 0:
            hist[0] += 1
        return hist
    if t > k or k == 0:
        return hist
    rp = <const uint64_t*> r.data
    with nogil:
        for first in range(lo, min(h, k - t + 1)):
            status = _walk(rp, k, nw, t, first, hp, maxw)
            if status != 0:
                break
    if status != 0:
        raise MemoryError()
    return hist
