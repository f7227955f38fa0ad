from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from loopcrystal import (
    ProductPoint,
    SkewShape,
    corner_sets,
    energy,
    jacobi_trudi_schur,
    loop_e,
    product_e,
    schur_pushforward,
    tableaux_schur,
)
from loopcrystal.exact import LoopVarPoly, VarId, poly_eval
from loopcrystal.loopsym import determinant, energy_shape, schur_value, tableau_weight, tableaux
from loopcrystal.verify import shape_family
from loopcrystal.whirl import from_factors

pos = st.fractions(min_value=F(1, 10), max_value=20, max_denominator=10)


def x(f, c):
    return LoopVarPoly.var(VarId(f, c))


def test_loop_e_examples(running):
    a = running.assignment()
    assert loop_e(2, 1, 2, 2) == x(1, 1) * x(2, 2)
    assert poly_eval(loop_e(2, 1, 2, 2), a) == 14
    assert loop_e(0, 1, 3, 4) == 1
    assert loop_e(1, 2, 2, 2) == x(1, 2) + x(2, 2)
    assert poly_eval(loop_e(1, 2, 2, 2), a) == 10
    assert loop_e(3, 1, 2, 2) == 0


def test_single_row_tableaux():
    want = x(1, 3) * x(1, 2) + x(1, 3) * x(2, 2) + x(2, 3) * x(2, 2)
    assert tableaux_schur(SkewShape((2,)), 0, 3, 2) == want
    # same polynomial from the 2x2 determinant e_1^(0) e_1^(2) - e_2^(2)
    assert jacobi_trudi_schur(SkewShape((2,)), 0, 3, 2) == want
    assert loop_e(1, 3, 3, 2) * loop_e(1, 2, 3, 2) - loop_e(2, 2, 3, 2) == want


def test_empty_shape_is_one():
    assert tableaux_schur(SkewShape((2, 1), (2, 1)), 1, 3, 2) == 1
    assert jacobi_trudi_schur(SkewShape((3, 1), (3, 1)), 2, 3, 2) == 1
    assert tableaux_schur(SkewShape(()), 1, 2, 2) == 1


def test_shape_validation():
    with pytest.raises(ValueError):
        SkewShape((1, 2))
    with pytest.raises(ValueError):
        SkewShape((2, 1), (3,))
    assert SkewShape((3, 1, 0), (1, 0)).mu == (1, 0)
    assert SkewShape((3, 1)).conjugate() == ((2, 1, 1), (0, 0, 0))


def test_tableau_weight_from_a_filling():
    # λ=(6,5,3), μ=(2) filled with rows [_,_,1,1,1,3], [1,2,2,3,4], [3,3,4]
    rows = {1: [None, None, 1, 1, 1, 3], 2: [1, 2, 2, 3, 4], 3: [3, 3, 4]}
    T = {(i, j): v for i, row in rows.items() for j, v in enumerate(row, 1) if v is not None}
    w = tableau_weight(T, 0, 3)
    # each cell (i, j) contributes x_{T(i,j)}^{(i-j)}
    want = LoopVarPoly.constant(1)
    for (i, j), v in T.items():
        want = want * LoopVarPoly.var(VarId.of(v, i - j, 3))
    assert w == want and w.degree == 12


def test_tableaux_count():
    # ssyt of shape (2,1) with entries 1..3: 8
    assert len(tableaux(SkewShape((2, 1)), 3)) == 8
    assert len(tableaux(SkewShape((1, 1, 1)), 2)) == 0


def test_energy_examples(running):
    assert energy(2, 2) == x(1, 2) + x(2, 2)
    assert poly_eval(energy(2, 2), running.assignment()) == 10
    assert energy(3, 1) == 1
    assert energy_shape(3, 3) == SkewShape((4, 2))


def test_corners():
    E = SkewShape((4, 2))
    assert E.nw_corners() == [(1, 1)]
    assert E.se_corners() == [(1, 4), (2, 2)]
    A, B = corner_sets(E, 0, 3, 0, 0)
    assert A == {(1, 1)} and B == {(1, 4), (2, 2)}
    fig = SkewShape((9, 8, 6), (5, 3, 3))
    assert fig.nw_corners() == [(1, 6), (2, 4)]
    assert fig.se_corners() == [(1, 9), (2, 8), (3, 6)]


def test_remove_corners():
    E = SkewShape((4, 2))
    assert E.remove([(1, 1)], [(2, 2)]) == SkewShape((4, 1), (1,))
    with pytest.raises(ValueError):
        E.remove([(1, 2)])


def test_determinant():
    assert determinant([]) == 1
    assert determinant([[2, 3], [5, 7]]) == -1
    assert determinant([[1, 2, 3], [4, 5, 6], [7, 8, 10]]) == -3


def test_pushforward_worked_value(running):
    assert schur_pushforward(SkewShape((1,)), 0, 2, 2, running) == F(78, 7)
    direct = poly_eval(tableaux_schur(SkewShape((1,)), 0, 2, 2), product_e(running, 2, 2).assignment())
    assert direct == F(78, 7)


def test_energy_invariant_off_zero(running):
    D = energy(2, 2)
    assert poly_eval(D, product_e(running, 1, F(5, 3)).assignment()) == 10


@pytest.mark.parametrize("n,m", [(2, 2), (3, 2), (2, 3), (3, 3)])
def test_jacobi_trudi_small_family(n, m):
    for shape in shape_family(3, 3, 5):
        for r in range(1, n + 1):
            assert tableaux_schur(shape, r, n, m) == jacobi_trudi_schur(shape, r, n, m), (shape, r)


@given(st.lists(st.lists(pos, min_size=3, max_size=3), min_size=2, max_size=3), st.integers(1, 3))
def test_minor_matches_polynomial(rows, r):
    x_ = ProductPoint.of(*rows)
    Y = from_factors(x_)
    for shape in (SkewShape((2, 1)), SkewShape((3, 2), (1,)), SkewShape((2, 2))):
        assert schur_value(shape, r, Y) == poly_eval(tableaux_schur(shape, r, 3, x_.m), x_.assignment())


@given(st.lists(st.lists(pos, min_size=2, max_size=2), min_size=2, max_size=3), st.integers(1, 2), pos)
def test_pushforward_matches_direct(rows, k, c):
    x_ = ProductPoint.of(*rows)
    for shape in (SkewShape((2, 1)), SkewShape((3, 1), (1,)), SkewShape((2, 2), (1,))):
        for r in (1, 2):
            want = poly_eval(tableaux_schur(shape, r, 2, x_.m), product_e(x_, k, c).assignment())
            assert schur_pushforward(shape, r, k, c, x_) == want
