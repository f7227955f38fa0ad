"""n-periodic unipotent banded matrices: elements of the unipotent loop group.

A :class:`PeriodicBandedMatrix` stores, for each offset ``d`` in ``0..band``,
the n-vector ``(y_{i,i+d})`` indexed by the row residue ``i = 1..n``.
Entries below the diagonal and beyond the band are zero.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .crystal import FactorPoint, ProductPoint
from .exact import residue, to_rational


@dataclass(frozen=True)
class PeriodicBandedMatrix:
    n: int
    diagonals: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        diags = tuple(tuple(to_rational(v) for v in d) for d in self.diagonals)
        if not diags:
            diags = ((Fraction(1),) * self.n,)
        if any(len(d) != self.n for d in diags):
            raise ValueError("every diagonal needs exactly n entries")
        if any(v != 1 for v in diags[0]):
            raise ValueError("main diagonal must be all ones (unipotent)")
        # trailing zero diagonals are trimmed so band is canonical
        while len(diags) > 1 and not any(diags[-1]):
            diags = diags[:-1]
        object.__setattr__(self, "diagonals", diags)

    @property
    def band(self) -> int:
        return len(self.diagonals) - 1

    def diagonal(self, d: int) -> tuple[Fraction, ...]:
        if 0 <= d <= self.band:
            return self.diagonals[d]
        return (Fraction(0),) * self.n

    def __matmul__(self, other: "PeriodicBandedMatrix") -> "PeriodicBandedMatrix":
        return multiply(self, other)


def identity(n: int) -> PeriodicBandedMatrix:
    return PeriodicBandedMatrix(n, ())


def entry(Y: PeriodicBandedMatrix, i: int, j: int) -> Fraction:
    d = j - i
    if d < 0 or d > Y.band:
        return Fraction(0)
    return Y.diagonals[d][residue(i, Y.n) - 1]


def whirl(x: FactorPoint | Sequence) -> PeriodicBandedMatrix:
    """M(x): ones on the diagonal and x^{(i)} at (i, i+1)."""
    coords = x.coords if isinstance(x, FactorPoint) else tuple(to_rational(v) for v in x)
    n = len(coords)
    return PeriodicBandedMatrix(n, ((Fraction(1),) * n, coords))


def chevalley(k: int, a, n: int) -> PeriodicBandedMatrix:
    """u_k(a): the identity plus ``a`` at (i, i+1) for i = k mod n."""
    a = to_rational(a)
    row = [Fraction(0)] * n
    row[residue(k, n) - 1] = a
    return PeriodicBandedMatrix(n, ((Fraction(1),) * n, tuple(row)))


def multiply(A: PeriodicBandedMatrix, B: PeriodicBandedMatrix) -> PeriodicBandedMatrix:
    if A.n != B.n:
        raise ValueError(f"dimension mismatch: n={A.n} vs n={B.n}")
    n = A.n
    diags = []
    for d in range(A.band + B.band + 1):
        row = []
        for i in range(n):
            s = 0
            # (AB)_{i,i+d} = sum_a A_{i,i+a} B_{i+a,i+d}
            for a in range(max(0, d - B.band), min(d, A.band) + 1):
                u = A.diagonals[a][i]
                if u:
                    s += u * B.diagonals[d - a][(i + a) % n]
            row.append(s)
        diags.append(tuple(row))
    return PeriodicBandedMatrix(n, tuple(diags))


def times_whirl(Y: PeriodicBandedMatrix, x: FactorPoint) -> PeriodicBandedMatrix:
    """Y M(x), using (Y M(x))_{i,i+d} = y_{i,i+d} + y_{i,i+d-1} x^{(i+d-1)}."""
    n, band = Y.n, Y.band
    coords = x.coords
    diags = [Y.diagonals[0]]
    for d in range(1, band + 2):
        above = Y.diagonals[d] if d <= band else None
        prev = Y.diagonals[d - 1]
        diags.append(tuple(
            (above[i] if above else 0) + prev[i] * coords[(i + d - 1) % n] for i in range(n)
        ))
    return PeriodicBandedMatrix(n, tuple(diags))


def from_factors(x: ProductPoint) -> PeriodicBandedMatrix:
    """M(x_1) M(x_2) ... M(x_m)."""
    Y = whirl(x.factors[0])
    for f in x.factors[1:]:
        Y = times_whirl(Y, f)
    return Y


def window(Y: PeriodicBandedMatrix, rows: range, cols: range) -> list[list[Fraction]]:
    return [[entry(Y, i, j) for j in cols] for i in rows]


def render(Y: PeriodicBandedMatrix, rows: range, cols: range) -> str:
    """Text rendering of a window, rows and columns labelled by absolute index."""
    cells = [[str(v) for v in r] for r in window(Y, rows, cols)]
    width = max([len(str(j)) for j in cols] + [len(c) for r in cells for c in r])
    label = max(len(str(i)) for i in rows)
    lines = [" " * (label + 1) + " ".join(str(j).rjust(width) for j in cols)]
    for i, r in zip(rows, cells):
        lines.append(str(i).rjust(label) + " " + " ".join(c.rjust(width) for c in r))
    return "\n".join(lines)
