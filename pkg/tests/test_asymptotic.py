import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from loopcrystal import asymptotic as asy

CURLED = asy.WhirlStream((1.0, 1.5, 0.7), 0.5, (0.6, 0.8, 0.5))


@pytest.fixture(scope="module")
def Y():
    return asy.truncated_product(CURLED, 120, 60)


def test_window_validation():
    with pytest.raises(ValueError):
        asy.WindowMatrix(2, np.zeros((2, 4)))
    with pytest.raises(ValueError):
        asy.WhirlStream((1.0, 1.0), 1.0)
    with pytest.raises(ValueError):
        asy.truncated_product(CURLED, 10, 20)


def test_single_factor_and_degenerate_stream():
    s = asy.WhirlStream((2.0, 3.0), 0.5)
    assert asy.truncated_product(s, 1, 1).entries.tolist() == [[1, 2], [1, 3]]
    degenerate = asy.truncated_product(asy.WhirlStream((2.0, 3.0), 0.0), 30, 2)
    assert degenerate.entries.tolist() == [[1, 2, 0], [1, 3, 0]]


def test_window_is_read_only(Y):
    with pytest.raises(ValueError):
        Y.entries[0, 1] = 5.0
    with pytest.raises(IndexError):
        Y.entry(1, 100)


def test_truncation_settles():
    for stream in (asy.WhirlStream((1.0, 1.0), 0.5), CURLED):
        A = asy.truncated_product(stream, 100, 60).entries
        B = asy.truncated_product(stream, 200, 60).entries
        assert np.all(np.abs(A - B) <= 1e-12 * np.abs(A))


def test_narrow_window_does_not_converge():
    Y = asy.truncated_product(asy.WhirlStream((1.0, 1.0), 0.99, (0.5, 0.5)), 8, 8)
    assert not asy.limit_ratios(Y, 1).converged


def test_finite_band_is_a_division_by_zero():
    Y = asy.truncated_product(asy.WhirlStream((1.0, 2.0), 0.0), 20, 10)
    with pytest.raises(ZeroDivisionError):
        asy.limit_ratios(Y, 1)


@pytest.mark.xfail(strict=True, raises=ZeroDivisionError,
                   reason="pure whirl streams decay super-geometrically; see notes on the asymptotic criterion")
def test_pure_stream_converges_at_width_60():
    Y = asy.truncated_product(asy.WhirlStream((1.0, 1.0), 0.5), 120, 60)
    assert asy.limit_ratios(Y, 1).converged


def test_pure_stream_ratios_shrink():
    Y = asy.truncated_product(asy.WhirlStream((1.0, 1.0), 0.5), 60, 30)
    phis = asy.phi_sequence(Y, 1)
    assert all(b < a for a, b in zip(phis[5:], phis[6:]))


def test_curl_limits(Y):
    stats = asy.asym_stats(Y)
    assert all(s.converged for s in stats.values())
    # far along a row the curl dominates: phi_k -> z^(k)
    assert [stats[k].phi for k in (1, 2, 3)] == pytest.approx([0.6, 0.8, 0.5], rel=1e-9)


def test_asym_e(Y):
    assert asy.asym_e(Y, 2, 1.0).allclose(Y, 0)
    Z = asy.asym_e(Y, 2, 1.7)
    before, after = asy.asym_stats(Y), asy.asym_stats(Z)
    assert after[2].eps == pytest.approx(before[2].eps / 1.7, rel=1e-8)
    # n = 3 leaves no j outside {k-1, k, k+1}; check the gamma relation instead
    assert after[2].phi / after[2].eps == pytest.approx(1.7**2 * before[2].phi / before[2].eps, rel=1e-8)


def test_axioms_on_curled_window(Y):
    assert asy.check_asym_axioms(Y, 1.7, 0.4).all_passed


def test_update_phi_example():
    out = asy.update_phi({1: 1.0, 2: 2.0, 3: 3.0}, 1, 1.0, 3)
    assert out == {1: 2.0, 2: 2.0, 3: 1.5}
    assert asy.update_phi({1: 1.0, 2: 2.0, 3: 3.0}, 1, 0.0, 3) == {1: 1.0, 2: 2.0, 3: 3.0}


@given(
    st.lists(st.floats(0.1, 5.0), min_size=3, max_size=5),
    st.integers(1, 5),
    st.floats(0.01, 2.0),
    st.floats(0.01, 2.0),
)
def test_updates_form_a_group(vals, k, a, b):
    n = len(vals)
    phi = dict(enumerate(vals, 1))
    twice = asy.update_phi(asy.update_phi(phi, k, b, n), k, a, n)
    once = asy.update_phi(phi, k, a + b, n)
    assert all(twice[j] == pytest.approx(once[j], rel=1e-12) for j in phi)
    twice = asy.update_eps(asy.update_eps(phi, k, b, n), k, a, n)
    once = asy.update_eps(phi, k, a + b, n)
    assert all(twice[j] == pytest.approx(once[j], rel=1e-12) for j in phi)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_update_tables_match_windows(Y, k):
    stats = asy.asym_stats(Y)
    phi = {j: s.phi for j, s in stats.items()}
    eps = {j: s.eps for j, s in stats.items()}
    for a in (0.05, 0.8, 1.9):
        left = asy.asym_stats(asy.left_chevalley(Y, k, a))
        right = asy.asym_stats(asy.right_chevalley(Y, k, a))
        want_phi, want_eps = asy.update_phi(phi, k, a, 3), asy.update_eps(eps, k, a, 3)
        for j in phi:
            assert left[j].phi == pytest.approx(want_phi[j], rel=1e-6)
            assert right[j].eps == pytest.approx(want_eps[j], rel=1e-6)
            assert right[j].phi == pytest.approx(phi[j], rel=1e-8)
            assert left[j].eps == pytest.approx(eps[j], rel=1e-8)
