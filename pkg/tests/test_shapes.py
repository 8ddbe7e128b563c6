from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

from detloccoh.exactpoly import ONE, ZERO, LaurentPoly, poly_invert_var
from detloccoh.shapes import (
    Partition,
    Weight,
    binom,
    bott_flag_cohomology,
    bott_pushforward_c,
    bott_tilde,
    conjugate,
    dominant_weights,
    partitions_in_rectangle,
    product_space_cohomology,
    qbinom,
    qbinom_oracle,
)

partitions = st.lists(st.integers(0, 6), max_size=6).map(lambda xs: Partition(tuple(sorted(xs, reverse=True))))
small_weights = st.lists(st.integers(-4, 4), min_size=1, max_size=6)


def test_partition_normalizes_and_validates():
    assert Partition((3, 1, 0, 0)).parts == (3, 1)
    assert Partition((2, 1))[1] == 2 and Partition((2, 1))[5] == 0
    assert str(Partition((2, 1, 0))) == "(2,1)"
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))


def test_weight_flags():
    assert Weight.of((2, 0, -1)).dominant
    assert not Weight.of((0, 1)).dominant
    with pytest.raises(ValueError):
        Weight((0, 1), dominant=True)


def test_qbinom_examples():
    assert qbinom(5, 5) == qbinom(5, 0) == ONE
    assert qbinom(2, 1) == LaurentPoly({0: 1, 1: 1})
    assert qbinom(3, 1) == LaurentPoly({0: 1, 1: 1, 2: 1})
    assert qbinom(4, 2) == LaurentPoly({0: 1, 1: 1, 2: 2, 3: 1, 4: 1})
    assert qbinom(4, 2) == qbinom_oracle(4, 2)


def test_qbinom_out_of_range_is_zero():
    assert qbinom(2, 3) == ZERO
    assert qbinom(-1, 0) == ZERO
    assert qbinom(3, -1) == ZERO


def test_rectangle_enumeration():
    assert partitions_in_rectangle(1, 1) == [Partition(()), Partition((1,))]
    assert partitions_in_rectangle(0, 4) == [Partition(())]
    assert len(partitions_in_rectangle(2, 2)) == 6
    # every entry fits in the box and there are no repeats
    box = partitions_in_rectangle(3, 2)
    assert len(set(box)) == len(box) == binom(5, 2)
    assert all(len(x) <= 3 and x[1] <= 2 for x in box)


def test_binom_generalized():
    assert binom(5, 2) == 10
    assert binom(3, 5) == 0
    assert binom(4, -1) == 0
    assert binom(-1, 0) == 1
    assert binom(-1, 3) == -1
    assert binom(-2, 2) == 3


def test_conjugate_examples():
    assert conjugate(Partition((2, 1))) == Partition((2, 1))
    assert conjugate((3,)) == Partition((1, 1, 1))
    assert conjugate(()) == Partition(())


def test_dominant_weights():
    ws = dominant_weights(2, -1, 1)
    assert len(ws) == 6
    assert all(w[0] >= w[1] for w in ws)


def test_bott_examples():
    r = bott_tilde((3, 1, 1))
    assert not r.vanishes and r.degree == 0 and r.weight.entries == (3, 1, 1)
    assert bott_tilde((0, 1)).vanishes
    r = bott_tilde((0, 2))
    assert (r.degree, r.weight.entries) == (1, (1, 1))
    assert str(r) == "H^1 = S(1,1)"


def test_bott_flag_cohomology():
    r = bott_flag_cohomology((2, 1), (1, 0), 4)
    assert (r.degree, r.weight.entries) == (0, (2, 1, 1, 0))
    r = bott_flag_cohomology((), (0, 2), 2)
    assert (r.degree, r.weight.entries) == (1, (1, 1))
    assert bott_flag_cohomology((0,), (1,), 2).vanishes
    assert bott_flag_cohomology((5,), (0, 2), 3, part="fiberwise").weight.entries == (1, 1)
    with pytest.raises(ValueError):
        bott_flag_cohomology((1,), (0,), 3)
    with pytest.raises(ValueError):
        bott_flag_cohomology((0, 1), (0,), 3)


def test_bott_pushforward():
    lam, mu = bott_pushforward_c((3, 2), (1, 0))
    assert lam.entries == (3, 2, 1) and mu.entries == (0,)
    lam, mu = bott_pushforward_c((4,), (4,))
    assert lam.entries == (4, 4) and mu.entries == ()
    with pytest.raises(ValueError):
        bott_pushforward_c((0,), (1,))


def test_product_space_examples():
    r = product_space_cohomology((2,), (1, 0), 3)
    assert (r.degree, r.weight.entries) == (0, (2, 1, 0))
    assert product_space_cohomology((0,), (1,), 2).vanishes
    assert product_space_cohomology((0,), (2,), 2).degree == 2


@pytest.mark.parametrize("a", range(13))
def test_qbinom_identities(a):
    for b in range(a + 1):
        assert qbinom(a, b) == qbinom_oracle(a, b)
        assert qbinom(a, b) == qbinom(a, a - b)
        assert qbinom(a, b).evaluate(1) == binom(a, b)
        if a >= 1:
            assert qbinom(a, b) == qbinom(a - 1, b).shift(b) + qbinom(a - 1, b - 1)
        if a <= 10:
            assert poly_invert_var(qbinom(a, b)) == qbinom(a, b).shift(-b * (a - b))


@given(partitions)
def test_conjugate_involution(x):
    assert conjugate(conjugate(x)) == x
    assert conjugate(x).size == x.size


@given(small_weights)
def test_bott_tilde_properties(gamma):
    m = len(gamma)
    shifted = [g + m - 1 - i for i, g in enumerate(gamma)]
    r = bott_tilde(gamma)
    assert r.vanishes == (len(set(shifted)) < m)
    if not r.vanishes:
        assert r.weight.dominant
        assert (r.degree == 0) == all(gamma[i] >= gamma[i + 1] for i in range(m - 1))
        assert sum(r.weight.entries) == sum(gamma)


@given(st.lists(st.integers(-3, 3), min_size=2, max_size=5), st.data())
def test_product_space_degree_even(entries, data):
    split = data.draw(st.integers(1, len(entries) - 1))
    nu = sorted(entries[:split], reverse=True)
    r = product_space_cohomology(nu, entries[split:], len(entries))
    assert r.vanishes or r.degree % 2 == 0


def test_bott_inversion_count_is_bruhat_length():
    # every permutation of a regular weight is reached with degree equal to its inversions
    for perm in itertools.permutations((2, 1, 0)):
        gamma = tuple(v - (2 - i) for i, v in enumerate(perm))
        r = bott_tilde(gamma)
        assert r.weight.entries == (0, 0, 0)
        assert r.degree == sum(1 for i in range(3) for j in range(i + 1, 3) if perm[i] < perm[j])
