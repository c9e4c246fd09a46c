import numpy as np
import pytest
from hypothesis import given, strategies as st

import oracles
import sampling
from selfdual.construct import ConstructionParams, build_generator
from selfdual.gray import (
    ALT_F4U_CHAIN,
    CHAINS,
    binary_image,
    chain_for,
    lee_weight,
    phi1,
    phi_f4u,
    psi_f4,
    psi_f4u,
    ring_image,
)
from selfdual.groupring import RingMatrix
from selfdual.rings import RingId

W, WBAR = 0b0100, 0b0101


def test_phi1_examples():
    assert phi1([2]).tolist() == [1, 1]
    assert phi1([0, 0, 0]).tolist() == [0] * 6
    assert phi1([1, 3]).tolist() == [0, 1, 1, 0]
    assert [lee_weight([x], RingId.F2U) for x in range(4)] == [0, 1, 2, 1]
    assert lee_weight([1, 3], RingId.F2U) == 2
    assert phi1([1, 3], "interleave").tolist() == [0, 1, 1, 0]
    assert phi1([1, 2], "interleave").tolist() == [0, 1, 1, 1]


def test_psi_f4_examples():
    assert psi_f4([W]).tolist() == [1, 0]
    assert psi_f4([1]).tolist() == [1, 1]
    assert psi_f4([0, 0]).tolist() == [0, 0, 0, 0]


def test_psi_f4u_reconstructs():
    assert psi_f4u([0x4]).tolist() == [1, 0]
    for x in range(16):
        a, b = psi_f4u([x]).tolist()
        assert oracles.ring_mul(a, W) ^ oracles.ring_mul(b, WBAR) == x
    assert psi_f4u([0, 0]).tolist() == [0, 0, 0, 0]


def test_phi_f4u_reconstructs():
    # a + b u -> (b, a + b) over F4
    for x in range(16):
        b, apb = phi_f4u([x]).tolist()
        a = apb ^ b
        assert a ^ oracles.ring_mul(b, 2) == x


@given(st.lists(st.integers(0, 15), min_size=1, max_size=24))
def test_alternate_chain_preserves_weight(vec):
    main = CHAINS[RingId.F4U].apply(vec)
    alt = ALT_F4U_CHAIN.apply(vec)
    assert main.shape == alt.shape == (4 * len(vec),)
    assert main.sum() == alt.sum()


@given(st.sampled_from(list(RingId)), st.data(), st.sampled_from(["block", "interleave"]))
def test_linearity(ring, data, layout):
    n = data.draw(st.integers(1, 12))
    x = data.draw(st.lists(st.sampled_from(ring.codes()), min_size=n, max_size=n))
    y = data.draw(st.lists(st.sampled_from(ring.codes()), min_size=n, max_size=n))
    ch = chain_for(ring)
    s = np.bitwise_xor(x, y)
    assert np.array_equal(ch.apply(s, layout), ch.apply(x, layout) ^ ch.apply(y, layout))


def test_table1_row1_image():
    p = ConstructionParams.from_text("C3", "F4", "0,1", "0,1,1", "w,w", "0,1,w+1")
    code = binary_image(build_generator(p))
    assert (code.n, code.k) == (32, 16)
    assert oracles.is_self_dual(code.generator)
    assert oracles.min_weight(code.generator) == 8
    assert code.is_type_ii()


def test_table2_row1_image_dimensions():
    p = ConstructionParams.from_text("C3", "F4U", "1,8", "2,A,9", "6,6", "0,9,F")
    code = binary_image(build_generator(p))
    assert (code.n, code.k) == (64, 32) and code.is_self_dual()
    assert len(code.pivots) == 32


def test_identity_pair_over_f2u():
    g = RingMatrix(RingId.F2U, np.array([[1, 0, 1, 0], [0, 1, 0, 1]], dtype=np.uint8))
    code = binary_image(g)
    assert (code.n, code.k) == (8, 4)
    assert oracles.is_self_dual(code.generator)


@given(st.sampled_from([RingId.F2U, RingId.F4, RingId.F4U]), st.sampled_from(["C3", "C5"]),
       st.sampled_from(["block", "interleave"]), st.integers(0, 2**32 - 1))
def test_self_duality_and_dimension_preserved(ring, group, layout, seed):
    rng = np.random.default_rng(seed)
    for _ in range(50):
        p = sampling.candidate(rng, group, ring)
        gen = build_generator(p)
        if oracles.gram_is_zero(gen.entries.tolist()):
            break
    else:
        return
    code = binary_image(gen, layout=layout)
    assert code.k == gen.rows * CHAINS[ring].expansion
    assert oracles.is_self_dual(code.generator)


def test_layouts_give_the_same_weights():
    p = ConstructionParams.from_text("C3", "F4", "w,w", "0,0,w", "w,w+1", "1,1,w")
    block = binary_image(build_generator(p), layout="block")
    inter = binary_image(build_generator(p), layout="interleave")
    assert np.array_equal(oracles.weight_distribution(block.generator),
                          oracles.weight_distribution(inter.generator))


def test_ring_image_is_self_dual_over_f2u():
    p = ConstructionParams.from_text("C3", "F4U", "1,8", "2,A,9", "6,6", "0,9,F")
    r = ring_image(build_generator(p))
    assert r.ring is RingId.F2U and r.shape == (16, 32)
    assert oracles.gram_is_zero(r.entries.tolist())
    with pytest.raises(ValueError):
        ring_image(r)


def test_alternate_chain_only_for_f4u():
    with pytest.raises(ValueError):
        chain_for(RingId.F2U, alternate=True)
