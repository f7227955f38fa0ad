from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from loopcrystal import FactorPoint, ProductPoint, apply_s, apply_word, from_factors, kappa, product_e, product_stats
from loopcrystal.exact import PoleError
from loopcrystal.rmatrix import WordPoleError, orbit, reduced_words

pos = st.fractions(min_value=F(1, 10), max_value=20, max_denominator=10)


@st.composite
def points(draw, m_min=2, m_max=4):
    n = draw(st.integers(2, 4))
    m = draw(st.integers(m_min, m_max))
    return ProductPoint.of(*[[draw(pos) for _ in range(n)] for _ in range(m)])


def test_kappa_examples():
    assert kappa(FactorPoint((2, 3)), FactorPoint((5, 7)), 1) == 10
    ones = FactorPoint((1, 1, 1, 1))
    assert kappa(ones, ones, 3) == 4


def test_apply_s_running(running):
    y = apply_s(1, running)
    assert y.factors[0].coords == (F(49, 10), F(50, 7))
    assert y.factors[1].coords == (F(21, 10), F(20, 7))


def test_words():
    x = ProductPoint.of((2, 3), (5, 7), (F(1, 3), 4))
    assert apply_word([], x) == x
    assert apply_word([1, 1], x) == x
    assert len(reduced_words(4)) == 24
    assert reduced_words(3)[0] == ()
    assert len(orbit(x)) == 6


def test_bad_index(running):
    with pytest.raises(ValueError):
        apply_s(2, running)


def test_pole_reports_word_position():
    # kappa_1 = x^(2) + y^(2) vanishes
    x = ProductPoint.of((1, 1), (1, 1), (2, -1))
    with pytest.raises(WordPoleError) as info:
        apply_word([1, 2], x)
    assert info.value.position == 2
    assert isinstance(info.value, PoleError)


@given(points())
def test_involution_and_whirl_commute(x):
    M = from_factors(x)
    for j in range(1, x.m):
        assert apply_s(j, apply_s(j, x)) == x
        assert from_factors(apply_s(j, x)) == M


@given(points(m_min=3))
def test_braid(x):
    for j in range(1, x.m - 1):
        assert apply_word([j, j + 1, j], x) == apply_word([j + 1, j, j + 1], x)


@given(points(m_min=4))
def test_distant_commutation(x):
    assert apply_word([1, 3], x) == apply_word([3, 1], x)


@given(points(), st.integers(1, 4), pos)
def test_commutes_with_crystal(x, k, c):
    for j in range(1, x.m):
        assert apply_s(j, product_e(x, k, c)) == product_e(apply_s(j, x), k, c)
        assert product_stats(apply_s(j, x), k) == product_stats(x, k)
