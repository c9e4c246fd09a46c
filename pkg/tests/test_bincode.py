import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from selfdual import kernel
from selfdual.bincode import (
    BinaryCode,
    CodeError,
    CountCeilingError,
    EnumeratorError,
    WeightProfile,
    classify_enumerator,
    count_weight,
    count_weights,
    family_counts,
    fit_family,
    full_weight_distribution,
    is_extremal,
    min_weight,
    rains_bound,
    rank,
    rref,
)
from selfdual.construct import ConstructionParams, build_generator
from selfdual.gray import binary_image


def image(*row):
    return binary_image(build_generator(ConstructionParams.from_text(*row)))


TABLE3 = [
    ("C7", "F2", "0,0", "0,0,0,0,0,1,1", "0,1", "0,1,1,0,0,1,1"),
    ("C7", "F2", "1,0", "0,0,0,0,1,1,1", "1,1", "1,1,0,1,0,1,1"),
]


def test_rref_examples():
    eye = np.eye(5, dtype=np.uint8)
    r, k, piv = rref(eye)
    assert k == 5 and np.array_equal(r[:5], eye) and piv == list(range(5))
    m = np.vstack([eye, eye[:2]])
    assert rank(m) == 5
    rng = np.random.default_rng(0)
    for _ in range(5):
        a = rng.integers(0, 2, (16, 32)).astype(np.uint8)
        r, k, _ = rref(a)
        assert k == oracles.rank_gf2(a)
        r2, k2, _ = rref(r[:k])
        assert np.array_equal(r2[:k2], r[:k]) and k2 == k


def test_standard_form():
    a = np.array([[1, 1, 0, 1], [0, 1, 1, 1]], dtype=np.uint8)
    g = np.hstack([np.eye(2, dtype=np.uint8), a])
    std, perm = BinaryCode(g).standard_form()
    assert np.array_equal(std, g) and list(perm) == list(range(6))
    swapped = g[:, [2, 0, 1, 3, 4, 5]]
    code = BinaryCode(swapped)
    std, perm = code.standard_form()
    assert np.array_equal(std[:, :2], np.eye(2, dtype=np.uint8))
    # the permuted original spans the same space as the standard form
    assert rank(np.vstack([std, swapped[:, perm]])) == 2


def test_hamming8():
    code = BinaryCode(oracles.hamming8())
    assert code.is_self_dual() and code.is_type_ii() and code.type_label() == "II"
    assert min_weight(code) == 4
    assert count_weight(code, 4) == 14 and count_weight(code, 0) == 1
    assert full_weight_distribution(code).tolist() == [1, 0, 0, 0, 14, 0, 0, 0, 1]


def test_types_of_table3_rows():
    assert image(*TABLE3[0]).type_label() == "II"
    assert image(*TABLE3[1]).type_label() == "I"


def test_rains_bound_examples():
    assert rains_bound(64, type_ii=True) == 12
    assert rains_bound(68) == 12
    assert rains_bound(46) == 10
    assert rains_bound(32, type_ii=True) == 8


def test_count_ceiling_refuses_with_cost():
    code = BinaryCode(oracles.random_self_dual(np.random.default_rng(0), 12))
    with pytest.raises(CountCeilingError) as e:
        count_weights(code, [18])
    assert "visit about" in str(e.value)
    assert count_weights(code, [18], ceiling=24)[18] >= 0


def test_non_self_dual_rejected_by_counter():
    code = BinaryCode(np.array([[1, 1, 0, 0]], dtype=np.uint8))
    assert not code.is_self_dual()
    with pytest.raises(CodeError):
        count_weights(code, [2])
    assert min_weight(code) == 2


@settings(max_examples=25)
@given(st.integers(2, 12), st.integers(0, 2**32 - 1))
def test_against_full_enumeration(k, seed):
    gen = oracles.random_self_dual(np.random.default_rng(seed), k)
    code = BinaryCode(gen)
    assert code.is_self_dual() == oracles.is_self_dual(gen) == True  # noqa: E712
    dist = oracles.weight_distribution(gen)
    assert min_weight(code) == oracles.min_weight(gen)
    ws = list(range(code.n // 2 + 1))
    got = count_weights(code, ws, ceiling=code.n)
    assert [got[w] for w in ws] == dist[: len(ws)].tolist()
    assert full_weight_distribution(code).tolist() == dist.tolist()
    # self-dual binary codes contain the all-ones word, so counts are symmetric
    assert code.contains_all_ones()
    assert dist.tolist() == dist[::-1].tolist()


@settings(max_examples=4)
@given(st.integers(0, 2**32 - 1))
def test_two_sets_agree_with_one_set(seed):
    code = BinaryCode(oracles.random_self_dual(np.random.default_rng(seed), 20))
    rows = kernel.pack_rows(code.redundancy)
    for w in (2, 4, 6, 8):
        single = sum(int(kernel.level_histogram(rows, t, code.n)[w - t]) for t in range(w + 1))
        assert count_weight(code, w) == single


def test_thread_count_does_not_change_profile():
    code = image(*TABLE3[0])
    a = count_weights(code, [8, 10, 12], workers=1)
    b = count_weights(code, [8, 10, 12], workers=3)
    assert a == b


@pytest.mark.parametrize("family,params", [
    ("W56,1", {"alpha": -51}), ("W56,2", {"alpha": -12}),
    ("W64,1", {"beta": 14}), ("W64,2", {"beta": 64}),
    ("W68,2", {"gamma": 4, "beta": 190}), ("W68,1", {"beta": 20}),
    ("W80,2", {"alpha": -330, "beta": 10}),
])
def test_family_inversion_round_trip(family, params):
    n = int(family[1:3])
    counts = family_counts(family, params)
    fam, got = fit_family(n, counts)
    assert fam == family and got == params


@given(st.sampled_from([56, 64, 68, 80]), st.integers(-400, 400), st.integers(0, 300), st.integers(0, 9))
def test_family_inversion_property(n, a, b, g):
    fams = {56: ["W56,1", "W56,2"], 64: ["W64,1", "W64,2"], 68: ["W68,2"], 80: ["W80,2"]}[n]
    for fam in fams:
        params = {"W56,1": {"alpha": a}, "W56,2": {"alpha": a}, "W64,1": {"beta": b},
                  "W64,2": {"beta": b}, "W68,2": {"gamma": g, "beta": b},
                  "W80,2": {"alpha": a, "beta": b}}[fam]
        counts = family_counts(fam, params)
        f2, p2 = fit_family(n, counts)
        assert family_counts(f2, p2) == counts


def test_non_integral_parameter_is_loud():
    with pytest.raises(EnumeratorError) as e:
        fit_family(64, {12: 1313, 14: 0})
    assert e.value.counts == {12: 1313, 14: 0}


def test_classify_examples():
    prof = classify_enumerator(image("C13", "F2", "0,0", "0,0,0,0,0,0,0,1,0,1,0,1,1", "0,1",
                                     "0,0,0,0,1,1,1,0,1,1,1,1,1"))
    assert prof.family == "W56,1" and prof.params == {"alpha": -51} and prof.counts[10] == 104
    code = image("C3", "F4U", "1,8", "2,A,9", "6,6", "0,9,F")
    assert count_weight(code, 12) == 1520
    assert is_extremal(code, 12)


def test_profile_json_round_trip():
    p = WeightProfile(64, 12, {12: 1520, 14: 22208}, "I", "W64,2", {"beta": 13})
    assert WeightProfile.from_json(p.to_json()) == p


def test_text_format_round_trip():
    code = BinaryCode(oracles.hamming8())
    again = BinaryCode.from_text(code.to_text())
    assert np.array_equal(again.generator, code.generator)
    with pytest.raises(CodeError):
        BinaryCode.from_text("8 4\n1111")
