"""JSON payloads: rationals as "p/q" strings, points, matrices, shapes, words."""
from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Any

from .crystal import ProductPoint
from .exact import VarId, format_rational, to_rational
from .loopsym import SkewShape
from .whirl import PeriodicBandedMatrix


class SchemaError(ValueError):
    """A JSON request does not match the expected shape."""


def _need(obj: Any, key: str, kind: type | tuple[type, ...]):
    if not isinstance(obj, dict) or key not in obj:
        raise SchemaError(f"missing field {key!r}")
    value = obj[key]
    if not isinstance(value, kind) or isinstance(value, bool) and kind is not bool:
        raise SchemaError(f"field {key!r} has the wrong type")
    return value


def rational_from_json(value) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise SchemaError(f"rational must be a \"p/q\" string or an integer, got {value!r}")
    try:
        return to_rational(value)
    except (ValueError, ZeroDivisionError) as err:
        raise SchemaError(f"bad rational {value!r}: {err}") from None


def rational_to_json(q) -> str:
    return format_rational(q)


def varid_to_json(v: VarId) -> dict:
    return {"factor": v.factor, "color": v.color}


def varid_from_json(obj) -> VarId:
    try:
        return VarId(_need(obj, "factor", int), _need(obj, "color", int))
    except ValueError as err:
        raise SchemaError(str(err)) from None


def point_to_json(x: ProductPoint) -> dict:
    return {
        "n": x.n,
        "m": x.m,
        "factors": [[rational_to_json(v) for v in f.coords] for f in x.factors],
    }


def point_from_json(obj) -> ProductPoint:
    n = _need(obj, "n", int)
    factors = _need(obj, "factors", list)
    m = obj.get("m", len(factors))
    if len(factors) != m:
        raise SchemaError(f"m={m} but {len(factors)} factors given")
    if n < 2:
        raise SchemaError("n must be at least 2")
    rows = []
    for f in factors:
        if not isinstance(f, list) or len(f) != n:
            raise SchemaError(f"each factor needs exactly n={n} coordinates")
        rows.append(tuple(rational_from_json(v) for v in f))
    try:
        return ProductPoint.of(*rows)
    except ValueError as err:
        raise SchemaError(str(err)) from None


def matrix_to_json(Y: PeriodicBandedMatrix) -> dict:
    return {
        "n": Y.n,
        "band": Y.band,
        "diagonals": {str(d): [rational_to_json(v) for v in Y.diagonals[d]] for d in range(Y.band + 1)},
    }


def matrix_from_json(obj) -> PeriodicBandedMatrix:
    n = _need(obj, "n", int)
    diags = _need(obj, "diagonals", dict)
    try:
        offsets = sorted(int(d) for d in diags)
    except ValueError:
        raise SchemaError("diagonal keys must be integer offsets") from None
    if offsets and (offsets[0] < 0):
        raise SchemaError("negative diagonal offsets are not unipotent")
    band = max(offsets, default=0)
    rows = []
    for d in range(band + 1):
        vals = diags.get(str(d), ["1"] * n if d == 0 else ["0"] * n)
        if not isinstance(vals, list) or len(vals) != n:
            raise SchemaError(f"diagonal {d} needs exactly n={n} entries")
        rows.append(tuple(rational_from_json(v) for v in vals))
    try:
        return PeriodicBandedMatrix(n, tuple(rows))
    except ValueError as err:
        raise SchemaError(str(err)) from None


def shape_to_json(shape: SkewShape) -> dict:
    return {"lambda": list(shape.lam), "mu": list(shape.mu)}


def shape_from_json(obj) -> SkewShape:
    lam = _need(obj, "lambda", list)
    mu = obj.get("mu", []) if isinstance(obj, dict) else []
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in lam + list(mu)):
        raise SchemaError("shape parts must be integers")
    try:
        return SkewShape(tuple(lam), tuple(mu))
    except ValueError as err:
        raise SchemaError(str(err)) from None


def word_to_json(word) -> dict:
    return {"word": list(word)}


def word_from_json(obj) -> tuple[int, ...]:
    word = _need(obj, "word", list)
    if not all(isinstance(j, int) and not isinstance(j, bool) and j >= 1 for j in word):
        raise SchemaError("word entries must be positive integers")
    return tuple(word)


def _encode(obj) -> str:
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            raise ValueError("non-finite float in output")
        return format(obj, ".17g")
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {_encode(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_encode(v) for v in obj) + "]"
    if isinstance(obj, Fraction):
        return json.dumps(format_rational(obj))
    raise TypeError(f"cannot encode {type(obj).__name__}")


def dumps(obj) -> str:
    """Deterministic JSON; floats carry 17 significant digits."""
    return _encode(obj)
