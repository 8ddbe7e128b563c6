"""One test per acceptance criterion; each records a PASS/FAIL line for the summary."""

from __future__ import annotations

import random
import time

import pytest
import sympy

from conftest import ACCEPTANCE
from detloccoh import characters as ch
from detloccoh import quiver as qv
from detloccoh.exactpoly import BiPoly, LaurentPoly, poly_invert_var, q
from detloccoh.grothendieck import GammaElem, change_basis, euler_chi
from detloccoh.loccoh import (
    addq_class_D,
    addq_multiplicities_D,
    chi0_closed_form,
    chi_recurrence_check,
    h_class_D,
    h_class_Q,
    h_class_S,
    iterate_loccoh,
    start_expr,
)
from detloccoh.lyubeznik import lyub_gf, lyub_gf_via_iteration, lyub_table
from detloccoh.shapes import binom, dominant_weights, qbinom, qbinom_oracle
from detloccoh.verify import parity_violations


def record(k: int, ok: bool, detail: str, start: float, limit: float) -> None:
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < limit
    line = f"{detail} [{elapsed:.2f}s, limit {limit:g}s]"
    ACCEPTANCE[k] = (ok, line)
    print(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {line}")
    assert ok, line


def D(n, s, c):
    return GammaElem.basis_elem(n, s, "D", c)


def square_pairs(top):
    return [(m, n) for m in range(1, top + 1) for n in range(1, m + 1)]


def test_criterion_01_three_by_two():
    start = time.perf_counter()
    ok = h_class_S(3, 2, 1) == D(2, 1, q**2) + D(2, 0, q**3)
    ok &= h_class_D(3, 2, 0, 1) == D(2, 0, q**2 + q**4)
    table = iterate_loccoh("S", 2, 3, 2, [0, 1]).nonzero()
    ok &= {k: v.mult for k, v in table.items()} == {(0, 3): (1, 0, 0), (2, 2): (1, 0, 0), (4, 2): (1, 0, 0)}
    record(1, ok, "3x2 classes and the three iterated groups", start, 1)


def test_criterion_02_two_by_two():
    start = time.perf_counter()
    ok = h_class_S(2, 2, 1) == D(2, 0, q) + D(2, 1, q)
    ok &= start_expr("S", 2, 2, 2, 1).as_dict() == {1: {1: 1}}
    ok &= start_expr("S", 2, 2, 2, 1)[1].family == "Q"
    t = lyub_table(lyub_gf(2, 2, 1), 2, 2, 1)
    ok &= [(i, j) for i in range(4) for j in range(4) if t[i, j]] == [(3, 3)] and t[3, 3] == 1
    record(2, ok, "2x2: H^1 = Q_1 and the single Lyubeznik number at (3,3)", start, 1)


def test_criterion_03_four_by_four():
    start = time.perf_counter()
    ok = start_expr("S", 4, 4, 4, 2).as_dict() == {4: {2: 1}, 6: {1: 1}, 8: {0: 1}}
    ok &= start_expr("S", 4, 4, 4, 2).families() == {"Q"}
    expect = BiPoly({(0, 8): 1, (3, 10): 1, (5, 10): 1, (7, 10): 1, (8, 12): 1, (10, 12): 1, (12, 12): 1})
    ok &= lyub_gf(4, 4, 2) == expect
    record(3, ok, "4x4 rank 2: Q_2, Q_1, Q_0 and L_2(q,w)", start, 1)


def test_criterion_04_three_by_two_table():
    start = time.perf_counter()
    f = lyub_gf(3, 2, 1)
    ok = f == BiPoly({(0, 3): 1, (2, 4): 1, (4, 4): 1})
    grid = [[0] * 5 for _ in range(5)]
    grid[0][3] = grid[2][4] = grid[4][4] = 1
    ok &= lyub_table(f, 3, 2, 1).as_lists() == grid
    record(4, ok, "L_1 for 3x2 and its 5x5 table", start, 1)


def test_criterion_05_formula_vs_composition():
    start = time.perf_counter()
    triples = [(m, n, p) for m, n in square_pairs(6) for p in range(n)]
    bad = [t for t in triples if lyub_gf(*t) != lyub_gf_via_iteration(*t)]
    record(5, not bad, f"{len(triples)} triples, mismatches {bad}", start, 30)


def test_criterion_06_qbinomials():
    start = time.perf_counter()
    bad = []
    for a in range(13):
        for b in range(a + 1):
            g = qbinom(a, b)
            if g != qbinom_oracle(a, b) or g != qbinom(a, a - b) or g.evaluate(1) != binom(a, b):
                bad.append((a, b))
            if a and g != qbinom(a - 1, b).shift(b) + qbinom(a - 1, b - 1):
                bad.append((a, b, "pascal"))
            if poly_invert_var(g) != g.shift(-b * (a - b)):
                bad.append((a, b, "inversion"))
    record(6, not bad, f"a <= 12, failures {bad}", start, 5)


def test_criterion_07_euler_characteristic():
    start = time.perf_counter()
    bad = []
    for m, n in square_pairs(8):
        for p in range(1, n + 1):
            for t in range(p):
                if euler_chi(h_class_D(m, n, t, p), 0) != chi0_closed_form(m, n, t, p):
                    bad.append(("closed", m, n, t, p))
                if not chi_recurrence_check(m, n, t, p):
                    bad.append(("recurrence", m, n, t, p))
    for n in range(13):
        for p in range(n + 1):
            for t in range(p):
                lhs = sum((-1) ** (s - t) * binom(n, s) * binom(s - 1, t) * binom(n - 1 - s, p - s)
                          for s in range(t + 1, p + 1))
                if lhs != (-1) ** (p - t) * binom(n - 1, t) - binom(n - 1, p):
                    bad.append(("identity", n, t, p))
    record(7, not bad, f"closed form, recurrence, binomial identity; failures {bad}", start, 10)


@pytest.mark.xfail(strict=True, reason=(
    "the uniform parity (p-t)+p(m-n) holds for the [D_0] coefficient and for m = n, "
    "but fails for m > n, t >= 1: h_class_D(3,2,1,2) = q^2[D1] + q^3[D0]"))
def test_criterion_08_parity():
    start = time.perf_counter()
    bad_d = [(m, n, t, p) for m, n in square_pairs(8) for p in range(n + 1) for t in range(p)
             if parity_violations(m, n, t, p, per_component=False)]
    bad_q = [(n, t, p) for n in range(1, 9) for p in range(n + 1) for t in range(p)
             if any(e % 2 != (p - t) % 2 for e in h_class_Q(n, t, p).degrees())]
    detail = (f"D-classes: {len(bad_d)} violations, first {bad_d[:1]}, all with m > n and t >= 1: "
              f"{all(m > n and t >= 1 for m, n, t, _ in bad_d)}; Q-classes: {len(bad_q)} violations")
    record(8, not bad_d and not bad_q, detail, start, 5)


def test_criterion_08_parity_supporting_facts():
    # the parts of criterion 8 that do hold, kept green so regressions show up
    for m, n in square_pairs(8):
        for p in range(n + 1):
            for t in range(p):
                assert parity_violations(m, n, t, p) == []
                if m == n:
                    assert parity_violations(m, n, t, p, per_component=False) == []
    for n in range(1, 9):
        for p in range(n + 1):
            for t in range(p):
                assert all(e % 2 == (p - t) % 2 for e in h_class_Q(n, t, p).degrees())


def test_criterion_09_square_consistency():
    start = time.perf_counter()
    bad = []
    for n in range(1, 9):
        for p in range(n + 1):
            for t in range(n + 1):
                if change_basis(addq_class_D(n, t, p), "D") != h_class_D(n, n, t, p):
                    bad.append(("class", n, t, p))
                if t >= p:
                    continue
                ms = addq_multiplicities_D(n, t, p)
                if any(not x.has_nonneg_coeffs() for x in ms):
                    bad.append(("sign", n, t, p))
                if t + 2 > p:
                    continue
                for s in range(t + 1):
                    lhs = ms[s] - (qbinom(n - s - 1, p - s - 1) * qbinom(p - s - 2, p - t - 2)).shift(t - s)
                    if lhs != (qbinom(n - s - 1, p - s) * qbinom(p - s - 1, p - t - 1)).shift(p - s):
                        bad.append(("identity", n, s, t, p))
        for t in range(n + 1):
            total = GammaElem.zero(n, "D", n)
            for j, e in start_expr("S", n, n, n, t).items():
                g = GammaElem(n, e.family, tuple(LaurentPoly.const(x) for x in e.mult), n)
                total = total + change_basis(g, "D").scale(q**j)
            if total != h_class_S(n, n, t):
                bad.append(("S", n, t))
    record(9, not bad, f"n <= 8, failures {bad}", start, 10)


def test_criterion_10_witness_pairing():
    start = time.perf_counter()
    bad, cases = [], 0
    for m, n in square_pairs(4):
        for p in range(n + 1):
            for a in range(1, n + 1):
                expect = qbinom(n, p).subs_power(2).shift(p * (m - n)) if a == p else LaurentPoly()
                for d in range(m + n, m + n + 4):
                    cases += 1
                    if ch.witness_pairing(m, n, p, a, d) != expect:
                        bad.append((m, n, p, a, d))
    record(10, not bad, f"{cases} cases, failures {bad}", start, 60)


def test_criterion_11_quiver():
    start = time.perf_counter()
    bad = []
    for n in range(6):
        for i in range(n + 1):
            for j in range(n + 1):
                if qv.ext1_dim(qv.build_rep("Q", i, n), qv.build_rep("Q", j, n)):
                    bad.append(("ext", n, i, j))
    for n in range(7):
        for p in range(n + 1):
            qp = qv.build_rep("Q", p, n)
            if qv.simple_socle(qp) != [(p, 1)]:
                bad.append(("socle", n, p))
            if p and not qv.is_isomorphic_addq(qv.quotient(qp, qv.vertex_sub(qp, [p])), qv.build_rep("Q", p - 1, n)):
                bad.append(("socle quotient", n, p))
            for verts in qv.subreps_of_Q(p, n):
                mult = qv.decompose_addQ(qv.quotient(qp, qv.vertex_sub(qp, verts)))
                top = (min(verts) if verts else p + 1) - 1
                if mult != tuple(int(s == top) for s in range(n + 1)):
                    bad.append(("quotient", n, p, verts))
    rng = random.Random(7)
    for n in range(7):
        for _ in range(3):
            mult = [rng.randint(0, 2) for _ in range(n + 1)]
            r = qv.addq_rep(n, mult)
            gs = []
            for d in r.dims:
                g = sympy.Matrix(d, d, lambda *_: rng.randint(-3, 3))
                while d and g.det() == 0:
                    g = sympy.Matrix(d, d, lambda *_: rng.randint(-3, 3))
                gs.append(g)
            if qv.decompose_addQ(qv.conjugate_rep(r, gs)) != tuple(mult):
                bad.append(("round trip", n, mult))
    record(11, not bad, f"Ext^1, socles, quotients, peeling; failures {bad}", start, 30)


def test_criterion_12_h1m():
    start = time.perf_counter()
    bad, cases = [], 0
    for n in range(1, 7):
        for nu in dominant_weights(n, -3, 3):
            for l in range(n + 1):
                cases += 1
                if ch.j_h1m_vanishes(n, nu, l).vanishes != ch.h1m_closed_criterion(nu, l):
                    bad.append((n, nu, l))
    record(12, not bad, f"{cases} cases, disagreements {bad}", start, 10)
