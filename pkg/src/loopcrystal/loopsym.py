"""Loop symmetric functions: e_r^{(s)}, skew shapes, loop Schur functions.

Contents follow the convention c(i, j) = i - j (the negative of the usual
one); a cell (i, j) read at superscript r has color (i - j + r) mod n.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

from .crystal import ProductPoint, product_stats
from .exact import LoopVarPoly, VarId, _BITS, residue, to_rational
from .whirl import PeriodicBandedMatrix, entry, from_factors

Cell = tuple[int, int]


@dataclass(frozen=True)
class SkewShape:
    """λ/μ with λ, μ partitions and μ ⊆ λ; μ is padded to len(λ)."""

    lam: tuple[int, ...]
    mu: tuple[int, ...] = ()

    def __post_init__(self):
        lam = list(self.lam)
        while lam and lam[-1] == 0:
            lam.pop()
        mu = list(self.mu)
        while mu and mu[-1] == 0:
            mu.pop()
        if len(mu) > len(lam):
            raise ValueError(f"mu={self.mu} is not contained in lambda={self.lam}")
        mu += [0] * (len(lam) - len(mu))
        for seq, name in ((lam, "lambda"), (mu, "mu")):
            if any(v < 0 for v in seq) or any(a < b for a, b in zip(seq, seq[1:])):
                raise ValueError(f"{name}={seq} is not a partition")
        if any(m > l for m, l in zip(mu, lam)):
            raise ValueError(f"mu={self.mu} is not contained in lambda={self.lam}")
        object.__setattr__(self, "lam", tuple(lam))
        object.__setattr__(self, "mu", tuple(mu))

    def __contains__(self, cell: Cell) -> bool:
        i, j = cell
        return 1 <= i <= len(self.lam) and self.mu[i - 1] < j <= self.lam[i - 1]

    def cells(self) -> list[Cell]:
        return [(i, j) for i in range(1, len(self.lam) + 1) for j in range(self.mu[i - 1] + 1, self.lam[i - 1] + 1)]

    @property
    def size(self) -> int:
        return sum(self.lam) - sum(self.mu)

    def is_empty(self) -> bool:
        return self.size == 0

    def nw_corners(self) -> list[Cell]:
        return [(i, j) for i, j in self.cells() if (i - 1, j) not in self and (i, j - 1) not in self]

    def se_corners(self) -> list[Cell]:
        return [(i, j) for i, j in self.cells() if (i + 1, j) not in self and (i, j + 1) not in self]

    def remove(self, nw: Sequence[Cell] = (), se: Sequence[Cell] = ()) -> "SkewShape":
        """λ/μ - A - B: NW corners grow μ, SE corners shrink λ."""
        nw, se = set(nw), set(se)
        if nw & se:
            raise ValueError("corner sets to remove must be disjoint")
        lam, mu = list(self.lam), list(self.mu)
        for i, j in nw:
            if (i, j) not in self.nw_corners():
                raise ValueError(f"{(i, j)} is not a NW corner")
            mu[i - 1] += 1
        for i, j in se:
            if (i, j) not in self.se_corners():
                raise ValueError(f"{(i, j)} is not a SE corner")
            lam[i - 1] -= 1
        return SkewShape(tuple(lam), tuple(mu))

    def conjugate(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """(λ', μ') with μ' padded to len(λ')."""
        lam_c = tuple(sum(1 for p in self.lam if p >= j) for j in range(1, (self.lam[0] if self.lam else 0) + 1))
        mu_c = tuple(sum(1 for p in self.mu if p >= j) for j in range(1, len(lam_c) + 1))
        return lam_c, mu_c


def staircase(m: int) -> tuple[int, ...]:
    """δ_m = (m, m-1, ..., 1)."""
    return tuple(range(m, 0, -1))


def energy_shape(n: int, m: int) -> SkewShape:
    """(n-1) δ_{m-1}."""
    return SkewShape(tuple((n - 1) * p for p in staircase(m - 1)))


def cell_color(cell: Cell, r: int, n: int) -> int:
    i, j = cell
    return residue(i - j + r, n)


# -- polynomials ---------------------------------------------------------------


@lru_cache(maxsize=None)
def loop_e(r: int, s: int, n: int, m: int) -> LoopVarPoly:
    """e_r^{(s)}(x_1..x_m) = sum over i_1 < ... < i_r of prod_t x_{i_t}^{(s+t-1)}."""
    if r == 0:
        return LoopVarPoly.constant(1)
    if r < 0 or r > m:
        return LoopVarPoly.constant(0)
    terms = []
    for idx in combinations(range(1, m + 1), r):
        mono: dict[VarId, int] = {}
        for t, i in enumerate(idx):
            v = VarId.of(i, s + t, n)
            mono[v] = mono.get(v, 0) + 1
        terms.append((mono, 1))
    return LoopVarPoly.from_terms(terms)


def _ssyt(shape: SkewShape, m: int) -> Iterator[dict[Cell, int]]:
    """Semistandard fillings of ``shape`` with entries in 1..m (row-major backtracking)."""
    cells = shape.cells()
    below = {c: 0 for c in cells}
    for i, j in cells:
        t = i + 1
        while (t, j) in shape:
            below[(i, j)] += 1
            t += 1
    filling: dict[Cell, int] = {}

    def fill(pos):
        if pos == len(cells):
            yield filling
            return
        i, j = cells[pos]
        lo = max(filling.get((i, j - 1), 1), filling.get((i - 1, j), 0) + 1)
        for v in range(lo, m - below[(i, j)] + 1):
            filling[(i, j)] = v
            yield from fill(pos + 1)
        filling.pop((i, j), None)

    yield from fill(0)


def tableaux(shape: SkewShape, m: int) -> list[dict[Cell, int]]:
    return [dict(T) for T in _ssyt(shape, m)]


def tableau_weight(T: dict[Cell, int], r: int, n: int) -> LoopVarPoly:
    """The r-weight x^T = prod over cells of x_{T(s)}^{(c(s)+r)}."""
    mono: dict[VarId, int] = {}
    for cell, v in T.items():
        var = VarId(v, cell_color(cell, r, n))
        mono[var] = mono.get(var, 0) + 1
    return LoopVarPoly.from_terms([(mono, 1)])


@lru_cache(maxsize=None)
def tableaux_schur(shape: SkewShape, r: int, n: int, m: int) -> LoopVarPoly:
    """Loop Schur function as a generating function of semistandard tableaux."""
    cells = shape.cells()
    # Precompute the packed-monomial increment for (cell, entry).
    inc = {
        (c, v): 1 << (_BITS * VarId(v, cell_color(c, r, n)).slot)
        for c in cells
        for v in range(1, m + 1)
    }
    acc: dict[int, int] = {}
    for T in _ssyt(shape, m):
        key = 0
        for c, v in T.items():
            key += inc[(c, v)]
        acc[key] = acc.get(key, 0) + 1
    return LoopVarPoly(acc)


def determinant(matrix: Sequence[Sequence]):
    """Exact determinant by Laplace expansion along rows, memoised on column sets.

    Works over any commutative ring whose elements support ``+``, ``-`` and
    ``*`` with ints (Fractions, LoopVarPoly).  Cost is O(2^N N) ring products.
    """
    N = len(matrix)
    if N == 0:
        return 1
    # minors[cols] = det of rows (N-len(cols))..N-1 restricted to cols
    minors: dict[tuple[int, ...], object] = {(): 1}
    for row in range(N - 1, -1, -1):
        size = N - row
        new = {}
        for cols in combinations(range(N), size):
            total = 0
            for pos, col in enumerate(cols):
                a = matrix[row][col]
                if a == 0:
                    continue
                rest = cols[:pos] + cols[pos + 1:]
                sub = minors[rest]
                if sub == 0:
                    continue
                term = a * sub
                total = total + term if pos % 2 == 0 else total - term
            new[cols] = total
        minors = new
    return minors[tuple(range(N))]


def jacobi_trudi_matrix(shape: SkewShape, r: int, entry_fn) -> list[list]:
    """Matrix (e_{λ'_i - μ'_j - i + j}^{(r - j + 1 + μ'_j)})_{i,j}; ``entry_fn(deg, color)`` supplies e."""
    lam_c, mu_c = shape.conjugate()
    N = len(lam_c)
    return [
        [entry_fn(lam_c[i - 1] - mu_c[j - 1] - i + j, r - j + 1 + mu_c[j - 1]) for j in range(1, N + 1)]
        for i in range(1, N + 1)
    ]


@lru_cache(maxsize=None)
def jacobi_trudi_schur(shape: SkewShape, r: int, n: int, m: int) -> LoopVarPoly:
    """Loop Schur function as a determinant of loop elementary symmetric functions."""
    mat = jacobi_trudi_matrix(shape, r, lambda d, s: loop_e(d, residue(s, n), n, m))
    det = determinant(mat)
    return det if isinstance(det, LoopVarPoly) else LoopVarPoly.constant(det)


def energy(n: int, m: int) -> LoopVarPoly:
    """Birational energy D_B of X_M^m: the loop Schur function s^{(0)} of (n-1)δ_{m-1}."""
    if m < 1:
        raise ValueError("energy needs m >= 1")
    return tableaux_schur(energy_shape(n, m), 0, n, m)


# -- numeric evaluation through minors of M(x) -----------------------------------


def schur_value(shape: SkewShape, r: int, Y: PeriodicBandedMatrix) -> Fraction:
    """s^{(r)}_{λ/μ} at a point, as a Jacobi-Trudi minor of Y = M(x)."""

    def e_val(d, s):
        if d < 0:
            return Fraction(0)
        return entry(Y, s, s + d)

    return Fraction(determinant(jacobi_trudi_matrix(shape, r, e_val)))


def corner_sets(shape: SkewShape, r: int, n: int, k: int, kb: int) -> tuple[set[Cell], set[Cell]]:
    """(A, B): NW corners of color k and SE corners of color kb."""
    A = {c for c in shape.nw_corners() if cell_color(c, r, n) == residue(k, n)}
    B = {c for c in shape.se_corners() if cell_color(c, r, n) == residue(kb, n)}
    return A, B


def _subsets(s: set[Cell]) -> Iterator[tuple[Cell, ...]]:
    items = sorted(s)
    for size in range(len(items) + 1):
        yield from combinations(items, size)


def schur_pushforward(shape: SkewShape, r: int, k: int, c, x: ProductPoint) -> Fraction:
    """Value of (e_k^c)^* s^{(r)}_{λ/μ} at x, by the corner-removal expansion."""
    c = to_rational(c)
    n, m = x.n, x.m
    eps, phi, _ = product_stats(x, k)
    Y = from_factors(x)
    A_all, B_all = corner_sets(shape, r, n, k, k + m)
    a_coef = (c - 1) * phi
    b_coef = (1 / c - 1) * eps
    total = Fraction(0)
    for A in _subsets(A_all):
        for B in _subsets(B_all):
            if set(A) & set(B):
                continue
            sub = shape.remove(A, B)
            total += a_coef ** len(A) * b_coef ** len(B) * schur_value(sub, r, Y)
    return total
