"""Birational R-matrix: the S_m action s_1, ..., s_{m-1} on X_M^m."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .crystal import FactorPoint, ProductPoint
from .exact import PoleError, residue


def kappa(x: FactorPoint, y: FactorPoint, r: int) -> Fraction:
    """sum_{s=0}^{n-1} prod_{t=1}^{s} y^{(r+t)} prod_{t=s+1}^{n-1} x^{(r+t)}."""
    n = x.n
    total = Fraction(0)
    for s in range(n):
        term = Fraction(1)
        for t in range(1, s + 1):
            term *= y[r + t]
        for t in range(s + 1, n):
            term *= x[r + t]
        total += term
    return total


def apply_s(j: int, x: ProductPoint) -> ProductPoint:
    """s_j: replace factors j, j+1 by their R-matrix images."""
    if not 1 <= j < x.m:
        raise ValueError(f"transposition index must be in 1..{x.m - 1}, got {j}")
    n = x.n
    a, b = x.factors[j - 1], x.factors[j]
    kap = {r: kappa(a, b, r) for r in range(1, n + 1)}
    for r, v in kap.items():
        if v == 0:
            raise PoleError(f"kappa_{r}(x_{j}, x_{j + 1})")

    def k(r):
        return kap[residue(r, n)]

    new_a = tuple(b[r + 1] * k(r + 1) / k(r) for r in range(1, n + 1))
    new_b = tuple(a[r - 1] * k(r - 1) / k(r) for r in range(1, n + 1))
    factors = list(x.factors)
    factors[j - 1], factors[j] = FactorPoint(new_a), FactorPoint(new_b)
    return ProductPoint(tuple(factors))


class WordPoleError(PoleError):
    def __init__(self, position: int, inner: PoleError):
        self.position = position
        super().__init__(inner.denominator, f"at word position {position}")


def apply_word(word: Sequence[int], x: ProductPoint) -> ProductPoint:
    """Apply s_{w_1}, then s_{w_2}, ... (left to right)."""
    for pos, j in enumerate(word, 1):
        try:
            x = apply_s(j, x)
        except PoleError as err:
            raise WordPoleError(pos, err) from err
    return x


@lru_cache(maxsize=None)
def reduced_words(m: int) -> tuple[tuple[int, ...], ...]:
    """One reduced word for each element of S_m, found breadth-first.

    The result is deterministic, so it serves as a fixed table.
    """
    start = tuple(range(1, m + 1))
    seen = {start: ()}
    frontier = [start]
    while frontier:
        nxt = []
        for perm in frontier:
            for j in range(1, m):
                p = list(perm)
                p[j - 1], p[j] = p[j], p[j - 1]
                p = tuple(p)
                if p not in seen:
                    seen[p] = seen[perm] + (j,)
                    nxt.append(p)
        frontier = nxt
    return tuple(sorted(seen.values(), key=lambda w: (len(w), w)))


def orbit(x: ProductPoint) -> list[ProductPoint]:
    """The S_m-orbit of ``x``: one point per element of S_m."""
    return [apply_word(w, x) for w in reduced_words(x.m)]
