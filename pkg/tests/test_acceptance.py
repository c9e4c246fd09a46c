"""Acceptance gate: one check per criterion, each printing a PASS/FAIL line.

Run under pytest (a summary block is printed at the end of the session) or
directly with ``python3 tests/test_acceptance.py``.
"""

import os
import sys
import time

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))

import oracles  # noqa: E402
import sampling  # noqa: E402
from selfdual.bincode import BinaryCode, count_weights, full_weight_distribution, min_weight  # noqa: E402
from selfdual.construct import build_generator, check_conditions, gram, is_self_dual_over_ring  # noqa: E402
from selfdual.derive import ExtensionSpec, extend, neighbor  # noqa: E402
from selfdual.gray import binary_image  # noqa: E402
from selfdual.groupring import GroupRingElem, GroupSpec, sigma  # noqa: E402
from selfdual.manifests import TABLES  # noqa: E402
from selfdual.pipeline import record_for_row  # noqa: E402
from selfdual.reproduce import PASS, SKIP, run_row  # noqa: E402
from selfdual.rings import RingElem, RingId  # noqa: E402

RESULTS = {}


def report(number, ok, detail):
    line = f"criterion {number:2}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[number] = line
    print(line)
    return ok, detail


def run_table(table, limit, **kw):
    rows = [run_row(r.id, **kw) for r in TABLES[table]]
    slow = [r.row_id for r in rows if r.seconds > limit]
    return rows, slow


def table_detail(rows, slow, limit):
    bad = [f"{r.row_id} ({(r.message or r.status).split(';')[0]})" for r in rows if r.status != PASS]
    npass = sum(r.status == PASS for r in rows)
    s = f"{npass}/{len(rows)} rows pass"
    if bad:
        s += "; not passing: " + ", ".join(bad)
    if slow:
        s += f"; over {limit}s: " + ", ".join(slow)
    return s


def full_enumeration_check(rows, d, type_):
    """Confirm d and type by visiting every codeword."""
    wrong = []
    for r in rows:
        if r.status != PASS:
            continue
        dist = full_weight_distribution(record_for_row(r.row_id).code())
        got_d = int(np.flatnonzero(dist[1:])[0]) + 1
        doubly = not dist[np.arange(len(dist)) % 4 != 0].any()
        if got_d != d or (type_ is not None and doubly != (type_(r.row_id) == "II")):
            wrong.append(r.row_id)
    return wrong


# --------------------------------------------------------------- criteria

def criterion_1():
    rows, slow = run_table("table1", 1.0)
    wrong = full_enumeration_check(rows, 8, lambda rid: "II")
    ok = all(r.status == PASS for r in rows) and not slow and not wrong
    return report(1, ok, table_detail(rows, slow, 1.0) + (f"; enumeration disagrees: {wrong}" if wrong else ""))


def criterion_2():
    rows, slow = run_table("table3", 1.0)
    types = [r.observed.get("type") for r in rows]
    ok = all(r.status == PASS for r in rows) and not slow and types == ["II", "II", "I"]
    return report(2, ok, table_detail(rows, slow, 1.0) + f"; types {types}")


def criterion_3():
    rows, slow = run_table("table5", 5.0)
    printed = {r.id: r.expect["type"] for r in TABLES["table5"]}
    wrong = full_enumeration_check(rows, 8, printed.get)
    ok = all(r.status == PASS for r in rows) and not slow and not wrong and len(rows) == 15
    return report(3, ok, table_detail(rows, slow, 5.0) + (f"; enumeration disagrees: {wrong}" if wrong else ""))


def criterion_4():
    rows, slow = run_table("table7", 30.0)
    alphas = [r.observed.get("params", {}).get("alpha") for r in rows]
    wrong = []
    for r, a in zip(rows, alphas):
        if a is None:
            continue
        c = count_weights(record_for_row(r.row_id).code(), [10, 12])
        if c[10] != 308 + 4 * a or c[12] != 4246 - 8 * a:
            wrong.append(r.row_id)
    ok = (all(r.status == PASS for r in rows) and not slow and not wrong
          and alphas == [-51, -38, -25, -38, -12, -38, -64])
    return report(4, ok, table_detail(rows, slow, 30.0) + f"; alpha {alphas}")


def criterion_5():
    rows, slow = run_table("table2", 120.0)
    extra = []
    for rid, a12 in (("table2.1", 1520), ("table2.11", 2336)):
        r = next(x for x in rows if x.row_id == rid)
        if r.status == PASS and count_weights(record_for_row(rid).code(), [12])[12] != a12:
            extra.append(f"{rid} A12 != {a12}")
    ok = all(r.status == PASS for r in rows) and not slow and not extra
    return report(5, ok, table_detail(rows, slow, 120.0) + ("; " + ", ".join(extra) if extra else ""))


def criterion_6():
    rows, slow = run_table("table8", 120.0)
    type2 = sum(r.status == PASS and r.observed.get("type") == "II" for r in rows)
    betas = [r.observed["params"]["beta"] for r in rows
             if r.status == PASS and r.observed.get("family") == "W64,1"]
    ok = (all(r.status == PASS for r in rows) and not slow and type2 == 4
          and betas == [14, 14, 14, 29, 44, 44, 59, 74])
    return report(6, ok, table_detail(rows, slow, 120.0) + f"; {type2} Type II, W64,1 beta {betas}")


def criterion_7():
    rows, slow = run_table("table4", 120.0)
    npass = sum(r.status == PASS for r in rows)
    skip8 = rows[7].status == SKIP
    ok = npass == 7 and skip8 and not slow
    return report(7, ok, table_detail(rows, slow, 120.0) + f"; row 8 {'SKIP' if skip8 else rows[7].status}")


def criterion_8():
    rows, slow = run_table("table6", 300.0)
    wrong = []
    for r in rows:
        if r.status != PASS:
            continue
        a, b = r.observed["params"]["alpha"], r.observed["params"]["beta"]
        c = count_weights(record_for_row(r.row_id).code(), [14, 16])
        if c[14] != 3200 + 4 * a or c[16] != 47645 - 8 * a + 256 * b:
            wrong.append(r.row_id)
    row1 = rows[0].status == PASS and count_weights(record_for_row("table6.1").code(), [14])[14] == 1880
    ok = all(r.status == PASS for r in rows) and not slow and not wrong and row1
    return report(8, ok, table_detail(rows, slow, 300.0) + (f"; counts disagree: {wrong}" if wrong else ""))


def criterion_9():
    rows, slow = run_table("table10", 180.0)
    got = [(r.observed.get("params", {}).get("gamma"), r.observed.get("params", {}).get("beta")) for r in rows]
    want = [(4, 190), (4, 192), (4, 204), (4, 208), (4, 210), (4, 214)]
    ok = all(r.status == PASS for r in rows) and not slow and got == want
    return report(9, ok, table_detail(rows, slow, 180.0))


def criterion_10():
    rows, slow = run_table("table9", 180.0, coords="auto")
    ok = all(r.status == PASS for r in rows) and not slow and len(rows) == 17
    return report(10, ok, table_detail(rows, slow, 180.0))


def criterion_11(scale=1.0):
    t0 = time.perf_counter()
    rng = np.random.default_rng(20261015)
    problems = []

    # sigma is a ring homomorphism and turns the involution into transposition
    groups = ["C3", "C7", "C9", "C2xC3", "C3,3", "C3xC5"]
    npairs = int(10_000 * scale)
    for i in range(npairs):
        g = GroupSpec.parse(groups[i % len(groups)])
        ring = list(RingId)[(i // len(groups)) % 4]
        codes = ring.codes()
        v = GroupRingElem(g, ring, tuple(int(c) for c in rng.choice(codes, g.order)))
        w = GroupRingElem(g, ring, tuple(int(c) for c in rng.choice(codes, g.order)))
        if sigma(v * w) != sigma(v) @ sigma(w) or sigma(v + w) != sigma(v) + sigma(w):
            problems.append(f"sigma not multiplicative for {g} {ring.name}")
            break
        if sigma(v.star()) != sigma(v).T:
            problems.append(f"transpose law fails for {g} {ring.name}")
            break

    # conditions imply a self-orthogonal generator of full free rank
    combos = [(g, r) for g in ("C3", "C7", "C9") for r in (RingId.F2, RingId.F2U)]
    ncand = int(10_000 * scale)
    satisfied = counterexamples = 0
    for i in range(ncand):
        group, ring = combos[i % len(combos)]
        p = sampling.candidate(rng, group, ring, biased=i % 2 == 0)
        if check_conditions(p).all:
            satisfied += 1
            gen = build_generator(p)
            if not (gram(gen).is_zero() and is_self_dual_over_ring(gen)):
                counterexamples += 1
    if counterexamples:
        problems.append(f"{counterexamples} soundness counterexamples")

    # exact counting against brute force
    ncodes = max(1, int(100 * scale))
    for i in range(ncodes):
        k = 4 + i % 17
        gen = oracles.random_self_dual(rng, k)
        code = BinaryCode(gen)
        dist = oracles.weight_distribution(gen)
        d = int(np.flatnonzero(dist[1:])[0]) + 1
        if min_weight(code) != d:
            problems.append(f"min_weight wrong on a k={k} code")
            break
        ws = [d, d + 2, d + 4]
        got = count_weights(code, [w for w in ws if w <= code.n], ceiling=code.n)
        if any(got[w] != dist[w] for w in got):
            problems.append(f"count_weight wrong on a k={k} code")
            break

    # derivations keep self-duality
    nspecs = max(2, int(200 * scale))
    bad_derived = 0
    for i in range(nspecs):
        if i % 2 == 0:
            ring = (RingId.F2, RingId.F2U)[(i // 2) % 2]
            while True:
                base = build_generator(sampling.candidate(rng, "C3", ring))
                if is_self_dual_over_ring(base):
                    break
            units = [c for c in ring.codes() if oracles.ring_is_unit(c, ring.name)]
            while True:
                x = tuple(int(c) for c in rng.choice(ring.codes(), base.cols))
                if sum(oracles.ring_is_unit(c, ring.name) for c in x) % 2:
                    break
            ext = extend(ExtensionSpec(base, RingElem(ring, int(rng.choice(units))), x))
            if not (oracles.gram_is_zero(ext.entries.tolist())
                    and oracles.is_self_dual(binary_image(ext).generator)):
                bad_derived += 1
        else:
            c = BinaryCode(oracles.random_self_dual(rng, 3 + i % 12))
            while True:
                x = rng.integers(0, 2, c.n).astype(np.uint8)
                if x.sum() % 2 == 0 and not c.contains(x):
                    break
            d = neighbor(c, x)
            meet = c.k + d.k - oracles.rank_gf2(np.vstack([c.generator, d.generator]))
            if not (oracles.is_self_dual(d.generator) and meet == c.k - 1):
                bad_derived += 1
    if bad_derived:
        problems.append(f"{bad_derived} derived codes not self-dual")

    secs = time.perf_counter() - t0
    if secs > 600 * max(scale, 1.0):
        problems.append(f"took {secs:.0f}s")
    detail = (f"{npairs} sigma pairs, {ncand} candidates ({satisfied} satisfy the conditions, "
              f"{counterexamples} counterexamples), {ncodes} codes vs brute force, "
              f"{nspecs} derivations; {secs:.0f}s")
    if problems:
        detail += "; " + "; ".join(problems)
    return report(11, not problems, detail)


def criterion_12():
    """For each neighbor row: if exactly one interpretation passes, ``auto``
    must pass and name it; both failing counts as a defect."""
    defects, unnamed = [], []
    for row in TABLES["table9"]:
        std = run_row(row.id, coords="std").status == PASS
        raw = run_row(row.id, coords="raw").status == PASS
        if not (std or raw):
            defects.append(row.id)
            continue
        auto = run_row(row.id, coords="auto")
        if auto.status != PASS or auto.interpretation not in ("std", "raw") \
                or f"coords={auto.interpretation}" not in auto.line():
            unnamed.append(row.id)
    ok = not defects and not unnamed
    detail = f"{17 - len(defects)}/17 rows pass under some interpretation"
    if defects:
        detail += "; both interpretations fail: " + ", ".join(defects)
    if unnamed:
        detail += "; interpretation not reported: " + ", ".join(unnamed)
    return report(12, ok, detail)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11, criterion_12]


@pytest.mark.parametrize("check", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 13)])
def test_criterion(check):
    ok, detail = check()
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for check in CRITERIA:
        ok, _ = check()
        failed += not ok
    print(f"{12 - failed}/12 criteria pass")
    sys.exit(1 if failed else 0)
