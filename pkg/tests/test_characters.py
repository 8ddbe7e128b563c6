from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

from detloccoh import characters as ch
from detloccoh.exactpoly import ONE, ZERO, LaurentPoly, q
from detloccoh.shapes import binom, dominant_weights


def test_char_of_s_contains_constants():
    s = ch.char_of("S", 3, 2, bound=2)
    assert s.coeff((0, 0, 0), (0, 0)) == ONE
    assert ((2, 1, 0), (2, 1)) in s
    assert not s.exact


def test_char_of_d0_contains_dual_witness():
    for m, n in [(1, 1), (3, 2), (4, 4)]:
        d0 = ch.char_of("D", m, n, 0, bound=m + 1)
        assert d0.coeff((-n,) * m, (-m,) * n) == ONE


def test_dp_multiplicity_one_and_disjoint():
    m, n, B = 4, 3, 4
    seen = {}
    for p in range(n + 1):
        series = ch.char_of("D", m, n, p, bound=B)
        assert series.terms and all(c == ONE for c in series.terms.values())
        for pair in series.terms:
            assert pair not in seen
            seen[pair] = p
            assert pair[0] == ch.lambda_p(pair[1], m, n, p)


def test_char_of_q_and_ideals():
    qs = ch.char_of("Q", 2, 2, 1, bound=2)
    assert all(lam == mu and lam[1] <= -1 for lam, mu in qs.terms)
    ix = ch.char_of("Ix", 3, 2, x=(2, 1), bound=3)
    assert all(mu[0] >= 2 and mu[1] >= 1 for _, mu in ix.terms)
    rect = ch.char_of("Irect", 3, 2, a=1, d=2, bound=3)
    assert all(mu[0] >= 2 for _, mu in rect.terms)
    with pytest.raises(ValueError):
        ch.char_of("Q", 3, 2, 1)
    with pytest.raises(ValueError):
        ch.char_of("Z", 2, 2, 1)


def test_h_axd_examples():
    for d in (1, 3):
        h = ch.h_axd(3, 3, 3, d)
        assert h.terms == {((d,) * 3, (d,) * 3): ONE}
    assert ch.h_axd(1, 1, 1, 1).terms == {((1,), (1,)): ONE}
    h = ch.h_axd(2, 2, 1, 2)
    assert len(h) == 4
    assert h.coeff((2, 0), (2, 0)) == ONE
    assert h.coeff((3, 1), (3, 1)) == q**2


@pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 5) for n in range(1, m + 1)])
def test_h_axd_count_oracle(m, n):
    for a in range(1, n + 1):
        for d in range(1, 5):
            r = min(a, d)
            total = sum(c.evaluate(1) for c in ch.h_axd(m, n, a, d).terms.values())
            assert total == binom(r + n - a, r) * binom(m - a + r, r)


def test_syzygy_examples():
    assert ch.syzygy_gf(3, 2, 2, 2).terms == ch.h_axd(3, 2, 2, 2).terms
    for m, n, a, d in [(3, 2, 1, 2), (4, 3, 2, 3), (3, 3, 1, 1)]:
        s = ch.syzygy_gf(m, n, a, d)
        tor0 = [(pair, c.coeff(0)) for pair, c in s.terms.items() if c.coeff(0)]
        assert tor0 == [((((d,) * a + (0,) * (m - a)), (d,) * a + (0,) * (n - a)), 1)]
        assert all(c.has_nonneg_coeffs() for c in s.terms.values())


def test_render():
    text = ch.h_axd(2, 2, 1, 2).render().splitlines()
    assert text[0] == "q^0 * S[(2,0)]⊗S[(2,0)] (mult 1)"
    assert text[-1] == "q^2 * S[(3,1)]⊗S[(3,1)] (mult 1)"


def test_pairing_gl():
    h = ch.h_axd(2, 2, 1, 2)
    assert ch.pairing_gl(h, ch.CharacterSeries(2, 2)) == ZERO
    single = ch.CharacterSeries(2, 2, {((1, 0), (1, 0)): ONE})
    assert ch.pairing_gl(single, single) == ONE
    with pytest.raises(ValueError):
        ch.pairing_gl(ch.char_of("S", 2, 2, bound=2), ch.char_of("D", 2, 2, 0, bound=2))
    with pytest.raises(ValueError):
        ch.pairing_gl(ch.h_axd(2, 2, 1, 5), ch.char_of("S", 2, 2, bound=2))


def test_witness_example():
    assert ch.witness_pairing(3, 2, 1, 1, 6) == q + q**3
    with pytest.raises(ValueError):
        ch.witness_pairing(3, 2, 1, 1, 4)


@pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 5) for n in range(1, m + 1)])
def test_witness_pairing_two_routes(m, n):
    d = m + n
    for p in range(n + 1):
        dp = ch.char_of("D", m, n, p, bound=d + m + n).twist(n, m)
        for a in range(1, n + 1):
            via_chars = ch.pairing_gl(ch.h_axd(m, n, a, d), dp)
            assert via_chars == ch.witness_pairing(m, n, p, a, d) == ch.witness_pairing_closed(m, n, p, a)


def test_h1m_examples():
    assert ch.j_h1m_vanishes(3, (2, 1, 0), 0).vanishes
    assert ch.j_h1m_vanishes(3, (2, 1, 0), 2).vanishes
    assert ch.j_h1m_vanishes(3, (1, 1, 0), 1).vanishes
    v = ch.j_h1m_vanishes(3, (2, 1, 0), 1)
    assert not v.vanishes
    # alpha_j = -nu_{n+1-j} - n for j < n, alpha_n = 1 - nu_1 - n
    assert v.witness == (-3, -4, -4)
    s, ts, alpha = v.solution
    assert ch.h1m_system_holds(3, (2, 1, 0), 1, s, ts, alpha)
    assert ch.h1m_system_holds(3, (2, 1, 0), 1, 0, (0, 0), v.witness)
    with pytest.raises(ValueError):
        ch.j_h1m_vanishes(2, (0, 1), 1)


def test_h1m_n_equals_one():
    # with a single entry there is no nu_2 and l = 1 never vanishes
    assert not ch.j_h1m_vanishes(1, (5,), 1).vanishes
    assert ch.j_h1m_vanishes(1, (5,), 0).vanishes


def _grid_search(n, nu, l, lo=-12, hi=6):
    nu = tuple(v - nu[-1] for v in nu)
    for ts in itertools.combinations_with_replacement(range(l + 1), n - l):
        for s in range((ts[0] if ts else l) + 1):
            for alpha in itertools.combinations_with_replacement(range(hi, lo - 1, -1), n):
                if ch.h1m_system_holds(n, nu, l, s, ts, alpha):
                    return False
    return True


@pytest.mark.parametrize("n", [1, 2, 3])
def test_h1m_solver_against_grid(n):
    for nu in dominant_weights(n, -2, 2):
        for l in range(n + 1):
            assert ch.j_h1m_vanishes(n, nu, l).vanishes == _grid_search(n, nu, l)


@given(st.integers(1, 6).flatmap(lambda n: st.lists(st.integers(-3, 3), min_size=n, max_size=n)),
       st.data())
def test_h1m_matches_closed_criterion(nu, data):
    nu = tuple(sorted(nu, reverse=True))
    l = data.draw(st.integers(0, len(nu)))
    assert ch.j_h1m_vanishes(len(nu), nu, l).vanishes == ch.h1m_closed_criterion(nu, l)


def test_series_validation():
    with pytest.raises(ValueError):
        ch.CharacterSeries(2, 1, {((0, 1), (0,)): ONE})
    with pytest.raises(ValueError):
        ch.CharacterSeries(1, 1, {((0,), (0,)): LaurentPoly({0: -1})})
