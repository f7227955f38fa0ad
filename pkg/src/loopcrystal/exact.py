"""Exact scalars and sparse polynomials in the loop variables x_i^{(s)}.

Scalars are :class:`fractions.Fraction`.  Polynomials live in
:class:`LoopVarPoly`, a sparse dictionary from monomials to nonzero
coefficients.  Monomials are packed into a single Python integer (one
16-bit exponent field per variable), so multiplying monomials is integer
addition.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Iterator, Mapping, Union

Rational = Fraction
Number = Union[int, Fraction]

_BITS = 16
_MASK = (1 << _BITS) - 1


class PoleError(ZeroDivisionError):
    """A birational map was evaluated on one of its poles."""

    def __init__(self, denominator: str, detail: str = ""):
        self.denominator = denominator
        msg = f"pole: {denominator} vanishes"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class MissingVariableError(KeyError):
    def __init__(self, var: "VarId"):
        self.var = var
        super().__init__(f"assignment does not cover {var}")


def residue(c: int, n: int) -> int:
    """Canonical representative of ``c mod n`` in ``1..n``."""
    return (c - 1) % n + 1


def to_rational(value) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot read {value!r} as an exact rational")


def format_rational(q) -> str:
    """``"p/q"``, or ``"p"`` when the denominator is 1."""
    return str(Fraction(q))


@dataclass(frozen=True, order=True)
class VarId:
    """The variable x_factor^{(color)}; color is stored in ``1..n``."""

    factor: int
    color: int

    def __post_init__(self):
        if self.factor < 1 or self.color < 1:
            raise ValueError(f"VarId needs factor, color >= 1, got {self.factor}, {self.color}")

    @classmethod
    def of(cls, factor: int, color: int, n: int) -> "VarId":
        return cls(factor, residue(color, n))

    @property
    def slot(self) -> int:
        # Cantor pairing of (factor-1, color-1): injective and independent of n.
        a, b = self.factor - 1, self.color - 1
        return (a + b) * (a + b + 1) // 2 + b

    @classmethod
    def from_slot(cls, slot: int) -> "VarId":
        w = (math.isqrt(8 * slot + 1) - 1) // 2
        b = slot - w * (w + 1) // 2
        return cls(w - b + 1, b + 1)

    def __str__(self) -> str:
        return f"x{self.factor}^({self.color})"


def _monomial_key(exponents: Mapping[VarId, int]) -> int:
    key = 0
    for v, e in exponents.items():
        if e < 0 or e > _MASK:
            raise ValueError(f"exponent {e} out of range for {v}")
        key += e << (_BITS * v.slot)
    return key


def _decode_key(key: int) -> tuple[tuple[int, int], ...]:
    out = []
    slot = 0
    while key:
        e = key & _MASK
        if e:
            out.append((slot, e))
        key >>= _BITS
        slot += 1
    return tuple(out)


class LoopVarPoly:
    """Sparse polynomial with exact rational coefficients.

    Instances are immutable.  Build them with :meth:`var`, :meth:`constant`
    or :meth:`from_terms` and combine with ``+``, ``-``, ``*`` and ``**``.
    Scalars (ints and Fractions) are accepted on either side of an operator.

    >>> x, y = LoopVarPoly.var(VarId(1, 1)), LoopVarPoly.var(VarId(2, 1))
    >>> (x + y) * (x - y) == x**2 - y**2
    True
    """

    __slots__ = ("_terms", "__dict__")

    def __init__(self, terms: Mapping[int, Number] | None = None):
        self._terms: dict[int, Number] = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def _raw(cls, terms: dict[int, Number]) -> "LoopVarPoly":
        p = cls.__new__(cls)
        p._terms = terms
        return p

    @classmethod
    def constant(cls, c: Number) -> "LoopVarPoly":
        return cls._raw({0: c} if c else {})

    @classmethod
    def var(cls, v: VarId) -> "LoopVarPoly":
        return cls._raw({1 << (_BITS * v.slot): 1})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Mapping[VarId, int], Number]]) -> "LoopVarPoly":
        acc: dict[int, Number] = {}
        for mono, c in terms:
            k = _monomial_key(mono)
            acc[k] = acc.get(k, 0) + c
        return cls(acc)

    def terms(self) -> Iterator[tuple[dict[VarId, int], Number]]:
        """Yield ``(monomial, coefficient)`` with monomials as ``{VarId: exponent}``."""
        for k in sorted(self._terms):
            yield {VarId.from_slot(s): e for s, e in _decode_key(k)}, self._terms[k]

    def variables(self) -> frozenset[VarId]:
        return frozenset(VarId.from_slot(s) for s in self._slots)

    @cached_property
    def _decoded(self) -> tuple[tuple[Number, tuple[tuple[int, int], ...], int], ...]:
        out = []
        for k, c in self._terms.items():
            fac = _decode_key(k)
            out.append((c, fac, sum(e for _, e in fac)))
        return tuple(out)

    @cached_property
    def _slots(self) -> tuple[int, ...]:
        return tuple(sorted({s for _, fac, _ in self._decoded for s, _ in fac}))

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((d for _, _, d in self._decoded), default=-1)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    @staticmethod
    def _coerce(other) -> "LoopVarPoly":
        if isinstance(other, LoopVarPoly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return LoopVarPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return LoopVarPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LoopVarPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, Number] = {}
        get = out.get
        for k2, c2 in b.items():
            for k1, c1 in a.items():
                k = k1 + k2
                out[k] = get(k, 0) + c1 * c2
        return LoopVarPoly._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("only nonnegative integer powers")
        result = LoopVarPoly.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self.terms():
            factors = "*".join(f"{v}" + (f"^{e}" if e > 1 else "") for v, e in mono.items())
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append(factors)
            else:
                parts.append(f"{c}*{factors}")
        return " + ".join(parts)


def poly_equal(p: LoopVarPoly, q: LoopVarPoly) -> bool:
    """Exact coefficient-wise equality."""
    return (p - q).is_zero()


def poly_eval(p: LoopVarPoly, assignment: Mapping[VarId, Number]) -> Fraction:
    """Evaluate ``p`` exactly.

    The assignment is brought to a common denominator so the inner loop runs
    on Python integers only.
    """
    slots = p._slots
    values = {}
    for s in slots:
        v = VarId.from_slot(s)
        try:
            values[s] = Fraction(assignment[v])
        except KeyError:
            raise MissingVariableError(v) from None
    den = 1
    for q in values.values():
        den = den * q.denominator // math.gcd(den, q.denominator)
    nums = {s: q.numerator * (den // q.denominator) for s, q in values.items()}
    top = max(p.degree, 0)
    den_pows = [den**i for i in range(top + 1)]
    total: Number = 0
    for c, fac, d in p._decoded:
        t = c * den_pows[top - d]
        for s, e in fac:
            t *= nums[s] ** e
        total += t
    return Fraction(total) / den_pows[top]


def random_rational(rng: random.Random) -> Fraction:
    """Positive rational with numerator in 1..100 and denominator in 1..10."""
    return Fraction(rng.randint(1, 100), rng.randint(1, 10))


def sample_until(draw: Callable[[], object], ok: Callable[[object], bool], max_tries: int = 1000):
    """Redraw until ``ok`` holds; used to step off accidental poles."""
    for _ in range(max_tries):
        value = draw()
        try:
            if ok(value):
                return value
        except ZeroDivisionError:
            continue
    raise RuntimeError(f"no admissible sample in {max_tries} draws")
