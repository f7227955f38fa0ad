from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from loopcrystal import (
    CartanData,
    FactorPoint,
    ProductPoint,
    basic_e,
    basic_stats,
    check_axioms,
    product_e,
    product_stats,
)

pos = st.fractions(min_value=F(1, 10), max_value=20, max_denominator=10)


@st.composite
def points(draw, n=None, m=None):
    n = n or draw(st.integers(2, 4))
    m = m or draw(st.integers(1, 3))
    return ProductPoint.of(*[[draw(pos) for _ in range(n)] for _ in range(m)])


def test_cartan():
    assert CartanData(2).matrix() == [[2, -2], [-2, 2]]
    assert CartanData(3).matrix() == [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]
    assert CartanData(4).a(1, 3) == 0 and CartanData(4).a(4, 1) == -1
    with pytest.raises(ValueError):
        CartanData(1)


def test_factor_point_rejects_zero():
    with pytest.raises(ValueError):
        FactorPoint((1, 0))


def test_basic_stats_shifted():
    assert basic_stats(FactorPoint((2, 3)), 1, 1) == (3, 2, F(2, 3))
    assert basic_stats(FactorPoint((5, 7)), 2, 1) == (5, 7, F(7, 5))


def test_basic_e():
    assert basic_e(FactorPoint((2, 3)), 1, 1, 5).coords == (10, F(3, 5))
    x = FactorPoint((F(2, 7), 3, 11))
    assert basic_e(x, 2, 3, 1) == x


def test_product_stats_running(running):
    eps, phi, gamma = product_stats(running, 1)
    assert (eps, phi) == (F(3, 2), F(7, 5))
    assert gamma == phi / eps


def test_product_e_running(running):
    y = product_e(running, 1, 2)
    assert y.factors[0].coords == (F(17, 5), F(30, 17))
    assert y.factors[1].coords == (F(17, 4), F(140, 17))
    assert product_e(running, 1, 1) == running


def test_single_factor_reduces_to_basic():
    x = ProductPoint.of((F(3, 2), 5, F(1, 7)))
    for k in (1, 2, 3):
        assert product_stats(x, k) == basic_stats(x.factors[0], 1, k)
        assert product_e(x, k, F(4, 3)).factors[0] == basic_e(x.factors[0], 1, k, F(4, 3))


def test_zero_parameter_rejected(running):
    with pytest.raises(ValueError):
        product_e(running, 1, 0)


def test_axioms_n3_include_braid_relation(rng):
    from loopcrystal.crystal import random_point

    report = check_axioms(random_point(rng, 3, 3), F(5, 3), F(2, 7))
    assert report.all_passed
    assert any(r.axiom == 5 and r.status == "pass" for r in report.results)


def test_axioms_n2_skip_relation5(running):
    report = check_axioms(running, 3, F(1, 2))
    assert report.all_passed
    assert report.count("skip") == 2


def test_axioms_trivial_at_c1(running):
    assert check_axioms(running, 1, 1).all_passed


@given(points(), pos, pos)
def test_axioms_random(x, c, c2):
    report = check_axioms(x, c, c2)
    assert report.all_passed, report.failures()


@given(points(), st.integers(1, 4), pos, pos)
def test_action_is_multiplicative(x, k, a, b):
    # e_k^a e_k^b = e_k^{ab}: a one-parameter group
    assert product_e(product_e(x, k, b), k, a) == product_e(x, k, a * b)


# right-bracketed x_1 (x) (x_2 (x) (... (x) x_m)), built from the two-factor rule alone
def _right_stats(factors, start, k):
    eps1, phi1, _ = basic_stats(factors[0], start, k)
    if len(factors) == 1:
        return eps1, phi1
    eps2, phi2 = _right_stats(factors[1:], start + 1, k)
    d = phi2 + eps1
    return eps1 * eps2 / d, phi1 * phi2 / d


def _right_e(factors, start, k, c):
    if len(factors) == 1:
        return [basic_e(factors[0], start, k, c)]
    eps1, _, _ = basic_stats(factors[0], start, k)
    _, phi2 = _right_stats(factors[1:], start + 1, k)
    c_plus = (c * phi2 + eps1) / (phi2 + eps1)
    return [basic_e(factors[0], start, k, c_plus)] + _right_e(factors[1:], start + 1, k, c / c_plus)


@given(points(m=3), st.integers(1, 4), pos)
def test_bracketing_does_not_matter(x, k, c):
    eps, phi = _right_stats(list(x.factors), 1, k)
    assert product_stats(x, k)[:2] == (eps, phi)
    assert product_e(x, k, c).factors == tuple(_right_e(list(x.factors), 1, k, c))
