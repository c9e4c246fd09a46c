"""Random construction candidates, biased toward satisfying the conditions."""

from functools import lru_cache

import numpy as np

from selfdual.construct import ConstructionParams
from selfdual.groupring import GroupRingElem, GroupSpec
from selfdual.rings import MUL, RingId
from selfdual.search import all_vectors, norms, screen_target_codes


@lru_cache(maxsize=None)
def norm_index(group: str, ring: RingId):
    g = GroupSpec.parse(group)
    vecs = all_vectors(ring, g.order)
    nrm = norms(g, vecs)
    index = {}
    for i, row in enumerate(nrm):
        index.setdefault(row.tobytes(), []).append(i)
    return vecs, nrm, index


def augmentation(v):
    s = 0
    for c in v:
        s ^= int(c)
    return s


def candidate(rng, group: str, ring: RingId, biased: bool = True) -> ConstructionParams:
    g = GroupSpec.parse(group)
    codes = ring.codes()
    if not biased:
        gamma = tuple(int(x) for x in rng.choice(codes, 4))
        v1 = tuple(int(x) for x in rng.choice(codes, g.order))
        v2 = tuple(int(x) for x in rng.choice(codes, g.order))
    else:
        vecs, nrm, index = norm_index(group, ring)
        while True:
            g2, g4 = (int(x) for x in rng.choice(codes, 2))
            i1 = int(rng.integers(len(vecs)))
            want = (nrm[i1] ^ screen_target_codes(g, (0, g2, 0, g4))).tobytes()
            if want in index:
                break
        i2 = int(rng.choice(index[want]))
        v1 = tuple(int(x) for x in vecs[i1])
        v2 = tuple(int(x) for x in vecs[i2])
        gamma = (augmentation(v1), g2, augmentation(v2), g4)
    return ConstructionParams(g, ring, gamma, GroupRingElem(g, ring, v1), GroupRingElem(g, ring, v2))


def corner_norm(gamma):
    s = 0
    for x in gamma:
        s ^= int(MUL[x, x])
    return s
