"""Basic geometric crystal X_M, shifted-index products, and an axiom checker."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .exact import PoleError, VarId, random_rational, residue, to_rational


@dataclass(frozen=True)
class CartanData:
    """Cartan matrix of affine type A_{n-1}^{(1)}, indexed by residues 1..n."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"affine type A needs n > 1, got n={self.n}")

    def a(self, i: int, j: int) -> int:
        i, j = residue(i, self.n), residue(j, self.n)
        if i == j:
            return 2
        if self.n == 2:
            return -2
        if residue(i - j, self.n) in (1, self.n - 1):
            return -1
        return 0

    def matrix(self) -> list[list[int]]:
        return [[self.a(i, j) for j in range(1, self.n + 1)] for i in range(1, self.n + 1)]


@dataclass(frozen=True)
class FactorPoint:
    """A point (x^{(1)}, ..., x^{(n)}) of X_M with nonzero coordinates."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        coords = tuple(to_rational(c) for c in self.coords)
        if len(coords) < 2:
            raise ValueError("a factor needs n >= 2 coordinates")
        if any(c == 0 for c in coords):
            raise ValueError(f"coordinates of X_M must be nonzero: {coords}")
        object.__setattr__(self, "coords", coords)

    @property
    def n(self) -> int:
        return len(self.coords)

    def __getitem__(self, color: int) -> Fraction:
        """Coordinate x^{(color)}, color taken mod n."""
        return self.coords[residue(color, self.n) - 1]

    def scaled(self, color: int, by: Fraction) -> "FactorPoint":
        coords = list(self.coords)
        coords[residue(color, self.n) - 1] *= by
        return FactorPoint(tuple(coords))


@dataclass(frozen=True)
class ProductPoint:
    """A point (x_1, ..., x_m) of X_1 x ... x X_m."""

    factors: tuple[FactorPoint, ...]

    def __post_init__(self):
        factors = tuple(f if isinstance(f, FactorPoint) else FactorPoint(tuple(f)) for f in self.factors)
        if not factors:
            raise ValueError("a product point needs at least one factor")
        if len({f.n for f in factors}) != 1:
            raise ValueError("all factors must share the same n")
        object.__setattr__(self, "factors", factors)

    @classmethod
    def of(cls, *rows: Sequence) -> "ProductPoint":
        return cls(tuple(FactorPoint(tuple(r)) for r in rows))

    @property
    def n(self) -> int:
        return self.factors[0].n

    @property
    def m(self) -> int:
        return len(self.factors)

    def assignment(self) -> dict:
        """Map every variable x_i^{(s)} to its value, for :func:`poly_eval`."""
        return {VarId(i, s): f[s] for i, f in enumerate(self.factors, 1) for s in range(1, self.n + 1)}

    def replace(self, index: int, factor: FactorPoint) -> "ProductPoint":
        factors = list(self.factors)
        factors[index - 1] = factor
        return ProductPoint(tuple(factors))


def random_point(rng: random.Random, n: int, m: int) -> ProductPoint:
    return ProductPoint(
        tuple(FactorPoint(tuple(random_rational(rng) for _ in range(n))) for _ in range(m))
    )


# -- the basic crystal, with the shift of factor position ------------------


def basic_stats(x: FactorPoint, shift: int, k: int) -> tuple[Fraction, Fraction, Fraction]:
    """(eps_k, phi_k, gamma_k) of a factor sitting at position ``shift``."""
    eps = x[k + shift]
    phi = x[k + shift - 1]
    return eps, phi, phi / eps


def basic_e(x: FactorPoint, shift: int, k: int, c) -> FactorPoint:
    c = to_rational(c)
    if c == 0:
        raise ValueError("e_k^c needs c != 0")
    return x.scaled(k + shift - 1, c).scaled(k + shift, 1 / c)


# -- products ------------------------------------------------------------------


def _stats_prefix(factors: Sequence[FactorPoint], k: int) -> tuple[Fraction, Fraction]:
    """(eps, phi) of x_1 (x) ... (x) x_len, splitting off the last factor."""
    eps, phi, _ = basic_stats(factors[0], 1, k)
    for pos in range(2, len(factors) + 1):
        e2, p2, _ = basic_stats(factors[pos - 1], pos, k)
        d = p2 + eps
        if d == 0:
            raise PoleError("phi_k(x') + eps_k(x)", f"k={k}, factor {pos}")
        eps, phi = eps * e2 / d, phi * p2 / d
    return eps, phi


def product_stats(x: ProductPoint, k: int) -> tuple[Fraction, Fraction, Fraction]:
    """Product-crystal (eps_k, phi_k, gamma_k)."""
    eps, phi = _stats_prefix(x.factors, k)
    if eps == 0:
        raise PoleError("eps_k(x)", f"k={k}")
    return eps, phi, phi / eps


def product_e(x: ProductPoint, k: int, c) -> ProductPoint:
    """Apply e_k^c on the product, recursively on (first m-1 factors) (x) last."""
    c = to_rational(c)
    if c == 0:
        raise ValueError("e_k^c needs c != 0")
    factors = list(x.factors)
    # eps_k of each prefix x_1 (x) ... (x) x_p, for p = 1..m-1
    prefix_eps = []
    eps, _, _ = basic_stats(factors[0], 1, k)
    prefix_eps.append(eps)
    for pos in range(2, len(factors)):
        e2, p2, _ = basic_stats(factors[pos - 1], pos, k)
        d = p2 + eps
        if d == 0:
            raise PoleError("phi_k(x') + eps_k(x)", f"k={k}, factor {pos}")
        eps = eps * e2 / d
        prefix_eps.append(eps)
    for pos in range(len(factors), 1, -1):
        eps_left = prefix_eps[pos - 2]
        _, phi_right, _ = basic_stats(factors[pos - 1], pos, k)
        d = phi_right + eps_left
        if d == 0:
            raise PoleError("phi_k(x') + eps_k(x)", f"k={k}, factor {pos}")
        c_plus = (c * phi_right + eps_left) / d
        if c_plus == 0:
            raise PoleError("c+", f"k={k}, factor {pos}")
        factors[pos - 1] = basic_e(factors[pos - 1], pos, k, c / c_plus)
        c = c_plus
    factors[0] = basic_e(factors[0], 1, k, c)
    return ProductPoint(tuple(factors))


# -- axiom checking --------------------------------------------------------


@dataclass(frozen=True)
class AxiomResult:
    axiom: int
    i: int
    j: int
    status: str  # "pass", "fail", "pole", "undefined" or "skip"
    detail: str = ""


@dataclass
class AxiomReport:
    n: int
    results: list[AxiomResult] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(r.status in ("pass", "skip") for r in self.results)

    def failures(self) -> list[AxiomResult]:
        return [r for r in self.results if r.status not in ("pass", "skip")]

    def count(self, status: str) -> int:
        return sum(r.status == status for r in self.results)


def _exact_eq(a, b) -> bool:
    return a == b


def check_crystal_axioms(
    obj,
    n: int,
    c,
    c2,
    *,
    eps: Callable,
    gamma: Callable,
    act: Callable,
    scalar_eq: Callable = _exact_eq,
    obj_eq: Callable = _exact_eq,
    check_domain: bool = True,
) -> AxiomReport:
    """Check axioms (1)-(5) of a geometric crystal at one sample.

    ``eps(obj, k)``, ``gamma(obj, k)`` and ``act(obj, k, c)`` define the
    structure.  ``scalar_eq`` compares values in axioms (2)-(3) and
    ``obj_eq`` compares points in (4)-(5).  Poles are reported, not raised.
    """
    cartan = CartanData(n)
    report = AxiomReport(n)
    add = report.results.append
    ks = range(1, n + 1)

    def guarded(axiom, i, j, check):
        try:
            ok = check()
        except ArithmeticError as err:
            status = "pole" if isinstance(err, ZeroDivisionError) else "undefined"
            add(AxiomResult(axiom, i, j, status, str(err)))
            return
        add(AxiomResult(axiom, i, j, "pass" if ok else "fail"))

    if check_domain:
        for i in ks:
            guarded(1, i, i, lambda i=i: act(obj, i, 1) is not None)
    for i in ks:
        for j in ks:
            guarded(
                2, i, j,
                lambda i=i, j=j: scalar_eq(gamma(act(obj, i, c), j), c ** cartan.a(i, j) * gamma(obj, j)),
            )
        guarded(3, i, i, lambda i=i: scalar_eq(eps(act(obj, i, c), i), eps(obj, i) / c))
    for i in ks:
        for j in ks:
            if i == j:
                continue
            a = cartan.a(i, j)
            if a == 0:
                guarded(
                    4, i, j,
                    lambda i=i, j=j: obj_eq(act(act(obj, j, c2), i, c), act(act(obj, i, c), j, c2)),
                )
            elif a == -1:
                guarded(
                    5, i, j,
                    lambda i=i, j=j: obj_eq(
                        act(act(act(obj, i, c2), j, c * c2), i, c),
                        act(act(act(obj, j, c), i, c * c2), j, c2),
                    ),
                )
            else:
                add(AxiomResult(5, i, j, "skip", f"a_ij={a}"))
    return report


def check_axioms(x: ProductPoint, c, c2) -> AxiomReport:
    """Axioms (2)-(5), plus the pointwise domain check for (1), on X_M^m."""
    c, c2 = to_rational(c), to_rational(c2)
    return check_crystal_axioms(
        x, x.n, c, c2,
        eps=lambda p, k: product_stats(p, k)[0],
        gamma=lambda p, k: product_stats(p, k)[2],
        act=product_e,
    )
