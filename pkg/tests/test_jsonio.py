from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from loopcrystal import ProductPoint, SkewShape, from_factors
from loopcrystal.exact import VarId
from loopcrystal.jsonio import (
    SchemaError,
    dumps,
    matrix_from_json,
    matrix_to_json,
    point_from_json,
    point_to_json,
    rational_from_json,
    rational_to_json,
    shape_from_json,
    shape_to_json,
    varid_from_json,
    varid_to_json,
    word_from_json,
    word_to_json,
)

nonzero = st.fractions(min_value=-50, max_value=50, max_denominator=30).filter(bool)


def test_rationals():
    assert rational_to_json(F(17, 5)) == "17/5"
    assert rational_from_json("17/5") == F(17, 5)
    assert rational_from_json(3) == 3
    for bad in (1.5, True, None, "1/0", "x"):
        with pytest.raises(SchemaError):
            rational_from_json(bad)


def test_point_schema():
    with pytest.raises(SchemaError):
        point_from_json({"n": 1, "factors": [["1"]]})
    with pytest.raises(SchemaError):
        point_from_json({"n": 2, "factors": [["1", "2", "3"]]})
    with pytest.raises(SchemaError):
        point_from_json({"n": 2, "factors": [["1", "0"]]})
    with pytest.raises(SchemaError):
        point_from_json({"n": 2, "m": 3, "factors": [["1", "2"]]})


def test_matrix_schema():
    with pytest.raises(SchemaError):
        matrix_from_json({"n": 2, "diagonals": {"0": ["1", "2"]}})
    with pytest.raises(SchemaError):
        matrix_from_json({"n": 2, "diagonals": {"-1": ["1", "2"]}})
    # a missing main diagonal means ones
    Y = matrix_from_json({"n": 2, "diagonals": {"1": ["2", "3"]}})
    assert Y.diagonal(1) == (2, 3)


def test_shape_and_word():
    s = SkewShape((4, 2), (1,))
    assert shape_from_json(shape_to_json(s)) == s
    assert shape_from_json({"lambda": [2, 1]}) == SkewShape((2, 1))
    with pytest.raises(SchemaError):
        shape_from_json({"lambda": [1, 2]})
    assert word_from_json(word_to_json((1, 2, 1))) == (1, 2, 1)
    with pytest.raises(SchemaError):
        word_from_json({"word": [0]})
    assert varid_from_json(varid_to_json(VarId(3, 2))) == VarId(3, 2)


def test_dumps_is_stable():
    assert dumps({"b": [F(1, 3), 0.1], "a": True}) == '{"b": ["1/3", 0.10000000000000001], "a": true}'
    with pytest.raises(ValueError):
        dumps(float("nan"))


@given(st.integers(2, 4).flatmap(lambda n: st.lists(st.lists(nonzero, min_size=n, max_size=n), min_size=1, max_size=4)))
def test_round_trips(rows):
    x = ProductPoint.of(*rows)
    assert point_from_json(point_to_json(x)) == x
    Y = from_factors(x)
    assert matrix_from_json(matrix_to_json(Y)) == Y
