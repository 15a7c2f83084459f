"""Acceptance gate.  Each criterion records one PASS/FAIL line, printed in
the terminal summary of the pytest run (or run this file directly)."""

import random
import time

import pytest

from conftest import ACCEPTANCE, golden
from kostant.atlas import alternation_grid, distinct_types, grid_poset
from kostant.classify import (
    CostGuardError,
    NotCovered,
    fibonacci_cardinality,
    mult_one_mus,
    predicted_alternation_set,
    predicted_qmultiplicity,
    scan_conjecture,
)
from kostant.cli import table_rows
from kostant.closedforms import (
    a2_qformula,
    a3_qformula,
    alt_binomial_identity_check,
    chain_qformula,
    headed_chain_qformula,
)
from kostant.multiplicity import (
    _freudenthal_table,
    alternation_set,
    freudenthal_multiplicity,
    kostant_multiplicity,
)
from kostant.partition import partition_count_q
from kostant.rootsys import build_root_system
from kostant.weyl import from_word, parse_word


def record(key: str, ok: bool, detail: str) -> None:
    ACCEPTANCE[key] = (ok, detail)
    print(f"{'PASS' if ok else 'FAIL'}  {key}: {detail}")
    assert ok, detail


def _a_rows(rows):
    return [(r["ell"], tuple(r["mu"]), r["mq"].monomial_exponent(), r["size"]) for r in rows]


def _golden_a_rows(table, ell_max=10):
    return [(r["ell"], tuple(r["mu"]), r["exponent"], r["size"]) for r in table if r["ell"] <= ell_max]


# 1 -------------------------------------------------------------------

def test_c1_type_a_tables():
    gold = golden("A")
    bad, rows, times = [], 0, {}
    for rank in range(1, 7):
        t0 = time.perf_counter()
        got = _a_rows(table_rows("A", rank, 10))
        times[rank] = time.perf_counter() - t0
        want = _golden_a_rows(gold[f"A{rank}"])
        rows += len(want)
        if got != want:
            bad.append(rank)
    record("C1", not bad and times[6] < 60,
           f"A1-A6 tables, {rows} rows identical in order and content "
           f"(A6 {times[6]:.1f}s); mismatching ranks: {bad or 'none'}")


# 2 -------------------------------------------------------------------

def test_c2_type_a_high_rank():
    gold = golden("A")
    t0 = time.perf_counter()
    got = _a_rows(table_rows("A", 8, 10, threads=4))
    a8_time = time.perf_counter() - t0
    a8_ok = got == _golden_a_rows(gold["A8"]) and a8_time < 300

    # (10 w1, 0) is off the A10 root lattice (10 is not a multiple of 11), so the
    # 4242-element pair is taken from the printed A10 row (mu = w10) and from A9.
    t0 = time.perf_counter()
    a10 = alternation_set(build_root_system("A", 10), (10,) + (0,) * 9, (0,) * 9 + (1,), threads=4)
    a9 = alternation_set(build_root_system("A", 9), (10,) + (0,) * 8, (0,) * 9, threads=4)
    pair_time = time.perf_counter() - t0
    off_lattice = alternation_set(build_root_system("A", 10), (10,) + (0,) * 9, (0,) * 10)
    pair_ok = (a10.mq.monomial_exponent() == 45 and len(a10) == 4242 and a9.mq.monomial_exponent() == 45
               and len(a9) == 4242 and len(off_lattice) == 0 and pair_time < 1800)
    record("C2", a8_ok and pair_ok,
           f"A8 table (l<=10) matched in {a8_time:.1f}s; A10 (10w1, w10) and A9 (10w1, 0) give q^45 "
           f"with |A| = {len(a10)}, {len(a9)} in {pair_time:.1f}s; A10 (10w1, 0) is empty")


# 3 -------------------------------------------------------------------

def test_c3_type_b_tables():
    gold = golden("B")
    bad, rows, b6_size = [], 0, None
    for rank in range(2, 7):
        rs = build_root_system("B", rank)
        table = gold[f"B{rank}"]
        ell_max = max(r["ell"] for r in table)
        got = table_rows("B", rank, ell_max)
        rows += len(table)
        if [(r["ell"], tuple(r["mu"])) for r in got] != [(r["ell"], tuple(r["mu"])) for r in table]:
            bad.append(f"B{rank} rows")
            continue
        for g, w in zip(got, table):
            want_set = {from_word(rs, parse_word(x)) for x in w["set"]}
            got_set = set(alternation_set(rs, g["lambda"], g["mu"]).elements)
            if g["mq"].monomial_exponent() != w["exponent"] or got_set != want_set:
                bad.append(f"B{rank} l={w['ell']} mu={w['mu']}")
            if rank == 6 and w["ell"] == 7 and w["mu"] == [0, 0, 0, 0, 0, 2]:
                b6_size = len(got_set)
    record("C3", not bad and b6_size is not None,
           f"B2-B6 tables, {rows} rows: exponents and sets (as group elements) identical; "
           f"B6 l=7 mu=2w6 set has {b6_size} elements, as printed; mismatches: {bad or 'none'}")


# 4 -------------------------------------------------------------------

def test_c4_fibonacci_counts():
    checked, bad = 0, []
    for r in range(3, 9):
        rs = build_root_system("B", r)
        for ell in (1, 3, 5, 7, 9):
            for c in mult_one_mus("B", r, ell):
                if c.kind == "B-k":
                    checked += 1
                    if len(alternation_set(rs, c.lam, c.mu)) != fibonacci_cardinality(r, "k"):
                        bad.append((r, ell, c.mu))
    jk = 0
    for r in range(4, 8):
        rs = build_root_system("B", r)
        for ell in range(1, 22, 2):
            for c in mult_one_mus("B", r, ell):
                if c.kind == "B-jk":
                    jk += 1
                    if len(alternation_set(rs, c.lam, c.mu)) != fibonacci_cardinality(r, "jk"):
                        bad.append((r, ell, c.mu))
    record("C4", not bad and checked and jk,
           f"|A| = F_(r+1) on {checked} k-cases (3<=r<=8) and 2F_r on {jk} j,k-cases (4<=r<=7, l<=21)")


# 5 -------------------------------------------------------------------

def _covered_cases():
    plan = [("A", r, 10) for r in range(1, 7)] + [("B", r, 10) for r in range(2, 7)] + [("G2", 2, 20)]
    for fam, r, top in plan:
        rs = build_root_system(fam, r)
        for ell in range(1, top + 1):
            for c in mult_one_mus(fam, r, ell):
                yield c, alternation_set(rs, c.lam, c.mu)


@pytest.fixture(scope="module")
def covered():
    return list(_covered_cases())


def test_c5_alternation_sets(covered):
    n, bad = 0, []
    for c, rec in covered:
        want = predicted_alternation_set(c)
        if want is not NotCovered:
            n += 1
            if want != frozenset(rec.words):
                bad.append((c.family.value, c.rank, c.ell, c.mu))
    g2 = sum(1 for c, rec in covered if c.kind == "G2" and set(rec.words) == {"1", "s1"})
    record("C5.sets", not bad and n > 0,
           f"{n} covered alternation sets agree with brute force (G2 {{1, s1}} on {g2} pairs)")


def test_c5_qmultiplicities(covered):
    n, bad = 0, []
    for c, rec in covered:
        if c.kind == "B-jk":
            continue
        want = predicted_qmultiplicity(c)
        if want is not NotCovered:
            n += 1
            if want != rec.mq:
                bad.append((c.family.value, c.rank, c.ell, c.mu))
    record("C5.q", not bad and n > 0,
           f"{n} covered q-multiplicities (type A, B k-case, G2 q^(n+2)) agree with brute force")


@pytest.mark.xfail(strict=True, reason="stated exponent r+2j+6k-2 disagrees with computation and printed tables")
def test_c5_qmultiplicities_jk_case(covered):
    n, bad = 0, []
    for c, rec in covered:
        if c.kind == "B-jk":
            n += 1
            want = predicted_qmultiplicity(c)
            if want != rec.mq:
                bad.append(f"B{c.rank} l={c.ell} mu={list(c.mu)}: q^{want.monomial_exponent()} "
                           f"vs q^{rec.mq.monomial_exponent()}")
    record("C5.q-jk", not bad,
           f"{n - len(bad)}/{n} j,k-case q-multiplicities match the stated q^(r+2j+6k-2); "
           f"computed values are q^(r+2j+6k): {'; '.join(bad)}")


# 6 -------------------------------------------------------------------

def test_c6_conjecture_scan():
    reports = [scan_conjecture("A", range(1, 7), range(1, 11)),
               scan_conjecture("B", range(2, 6), range(1, 11)),
               scan_conjecture("G2", range(2, 3), range(1, 21))]
    pairs = sum(len(r.entries) for r in reports)
    viol = sum(len(r.violations) for r in reports)
    record("C6", viol == 0 and pairs > 0,
           f"{pairs} multiplicity-one pairs scanned, every m_q a single power of q with m = 1; violations: {viol}")


# 7 -------------------------------------------------------------------

def test_c7_closed_forms():
    t0 = time.perf_counter()
    a2, a3 = build_root_system("A", 2), build_root_system("A", 3)
    b6, b7 = build_root_system("B", 6), build_root_system("B", 7)
    ok = all(a2_qformula(n, m) == partition_count_q(a2, (n, m)) for n in range(13) for m in range(13))
    ok &= all(a3_qformula(m, n, k) == partition_count_q(a3, (m, n, k))
              for m in range(9) for n in range(9) for k in range(9))
    ok &= all(chain_qformula(i, j) == partition_count_q(b7, tuple(int(i <= t <= j) for t in range(1, 8)))
              for i in range(1, 8) for j in range(i, 8))
    ok &= all(headed_chain_qformula(x, y, ell)
              == partition_count_q(b6, (x, y) + tuple(int(t <= ell) for t in range(3, 7)))
              for x in range(1, 7) for y in range(1, 7) for ell in range(3, 7))
    ok &= all(alt_binomial_identity_check(r) for r in range(31))
    dt = time.perf_counter() - t0
    record("C7", ok and dt < 60, f"closed forms equal the partition solver on all stated ranges ({dt:.1f}s)")


# 8 -------------------------------------------------------------------

def test_c8_freudenthal_oracle():
    rng = random.Random(20240415)
    systems = [build_root_system(*s) for s in [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("G2", 2)]]
    bad, nonzero = [], 0
    for i in range(200):
        rs = systems[i % len(systems)]
        lam = tuple(rng.randint(0, 3) for _ in range(rs.rank))
        if i % 2:
            mu = rng.choice(sorted(_freudenthal_table(rs, lam)))
        else:
            mu = tuple(rng.randint(0, 3) for _ in range(rs.rank))
        k, f = kostant_multiplicity(rs, lam, mu), freudenthal_multiplicity(rs, lam, mu)
        nonzero += f > 0
        if k != f:
            bad.append((rs.name, lam, mu, k, f))
    record("C8", not bad, f"200 random pairs over A1-A3, B2, B3, G2 agree ({nonzero} nonzero); mismatches: {bad or 'none'}")


# 9 -------------------------------------------------------------------

def test_c9_atlas():
    expected = {"A": (13, [1, 6, 6]), "B": (25, [1, 8, 8, 8]), "G2": (61, [1, 12, 12, 12, 12, 12])}
    notes, ok = [], True
    for fam, (count, levels) in expected.items():
        rs = build_root_system(fam, 2)
        grid = alternation_grid(rs)
        wider = alternation_grid(rs, bound=grid.bound + 10)
        poset = grid_poset(grid)
        got = (distinct_types(grid), distinct_types(wider), poset.level_counts())
        ok &= got == (count, count, levels)
        notes.append(f"{rs.name} {got[0]} types (N={grid.bound}), {got[1]} at N+10, levels {got[2]}")
        if fam == "A":
            above_empty = sum(1 for a, _ in poset.cover_edges if poset.nodes[a])
            ok &= above_empty == 12 and len(poset.cover_edges) == 18
            notes.append(f"A2 cover edges: {above_empty} among nonempty sets, {len(poset.cover_edges)} with the bottom")
    record("C9", ok, "; ".join(notes))


# 10 ------------------------------------------------------------------

def test_c10_scope():
    refused = []
    for fam, rank in (("B", 10), ("A", 12)):
        try:
            scan_conjecture(fam, range(rank, rank + 1), range(1, 101))
        except CostGuardError as exc:
            refused.append(f"{fam}{rank} (~{exc.estimate:.2g})")
    record("C10", len(refused) == 2,
           "full range (l<=100, B up to r=10) not attempted; cost guard refuses "
           + ", ".join(refused) + "; criteria 1-9 stand in for it")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
