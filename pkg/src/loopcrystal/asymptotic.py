"""The m = infinity crystal on U, through finite windows in double precision.

A :class:`WindowMatrix` keeps the entries y_{i,i+d} for offsets ``0..width``.
Because every matrix here is upper unitriangular, left or right multiplication
by a band-1 matrix only reads offsets ``d`` and ``d-1``, so windows stay exact
under the operations below.

Limit ratios are estimated from the ratio sequences

    phi_k ~ y_{k,k+d} / y_{k+1,k+d}      (rows, d -> width)
    eps_k ~ y_{k-d,k+1} / y_{k-d,k}      (columns, read upwards)

For a summable stream of whirls the entries decay faster than any
geometric sequence, so both sequences tend to 0 and the relative convergence
test cannot succeed; a leading curl factor gives nonzero limits.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .crystal import AxiomReport, check_crystal_axioms
from .exact import residue

DEFAULT_TOL = 1e-9


class NotConvergedError(ArithmeticError):
    pass


@dataclass(frozen=True, eq=False)
class WindowMatrix:
    """``entries[i-1, d] = y_{i,i+d}`` for row residue i and offset d <= width."""

    n: int
    entries: np.ndarray

    def __post_init__(self):
        arr = np.array(self.entries, dtype=float)
        if arr.ndim != 2 or arr.shape[0] != self.n:
            raise ValueError(f"entries must have shape (n, width+1), got {arr.shape}")
        if not np.all(arr[:, 0] == 1.0):
            raise ValueError("main diagonal must be all ones")
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @property
    def width(self) -> int:
        return self.entries.shape[1] - 1

    def entry(self, i: int, j: int) -> float:
        d = j - i
        if d < 0:
            return 0.0
        if d > self.width:
            raise IndexError(f"offset {d} lies outside the window (width {self.width})")
        return float(self.entries[residue(i, self.n) - 1, d])

    def allclose(self, other: "WindowMatrix", rtol: float) -> bool:
        a, b = self.entries, other.entries
        return a.shape == b.shape and bool(np.all(np.abs(a - b) <= rtol * np.maximum(np.abs(a), np.abs(b))))


@dataclass(frozen=True)
class WhirlStream:
    """Whirls x_i^{(s)} = a^{(s)} q^{i-1}, optionally preceded by a curl.

    ``curl`` (if given) is the parameter vector z of the curl factor whose
    entries are y_{i,i+d} = z^{(i)} z^{(i+1)} ... z^{(i+d-1)}.
    """

    a: tuple[float, ...]
    q: float
    curl: tuple[float, ...] | None = None

    def __post_init__(self):
        a = tuple(float(v) for v in self.a)
        if len(a) < 2 or any(v <= 0 for v in a):
            raise ValueError("stream parameters a^{(s)} must be positive and n >= 2")
        if not 0 <= self.q < 1:
            raise ValueError("decay q must lie in [0, 1)")
        object.__setattr__(self, "a", a)
        if self.curl is not None:
            z = tuple(float(v) for v in self.curl)
            if len(z) != len(a) or any(v <= 0 for v in z):
                raise ValueError("curl parameters must be positive, one per color")
            object.__setattr__(self, "curl", z)

    @property
    def n(self) -> int:
        return len(self.a)

    def factor(self, i: int) -> np.ndarray:
        return np.array(self.a) * self.q ** (i - 1)


def _shift_index(n: int, width: int) -> np.ndarray:
    # idx[i, d] = residue of i + d - 1 (0-based), the color read at offset d of row i
    return (np.arange(n)[:, None] + np.arange(width + 1)[None, :] - 1) % n


def curl_window(z: Sequence[float], width: int) -> WindowMatrix:
    n = len(z)
    idx = _shift_index(n, width)
    z = np.asarray(z, dtype=float)
    arr = np.ones((n, width + 1))
    for d in range(1, width + 1):
        arr[:, d] = arr[:, d - 1] * z[idx[:, d]]
    return WindowMatrix(n, arr)


def identity_window(n: int, width: int) -> WindowMatrix:
    arr = np.zeros((n, width + 1))
    arr[:, 0] = 1.0
    return WindowMatrix(n, arr)


def times_whirl(Y: WindowMatrix, x: Sequence[float]) -> WindowMatrix:
    """Y M(x), truncated to the window."""
    x = np.asarray(x, dtype=float)
    idx = _shift_index(Y.n, Y.width)
    arr = Y.entries.copy()
    arr[:, 1:] += Y.entries[:, :-1] * x[idx[:, 1:]]
    return WindowMatrix(Y.n, arr)


def truncated_product(stream: WhirlStream, N: int, W: int) -> WindowMatrix:
    """Window of (curl) M(x_1) ... M(x_N)."""
    if N < W:
        raise ValueError(f"need N >= W, got N={N}, W={W}")
    Y = curl_window(stream.curl, W) if stream.curl is not None else identity_window(stream.n, W)
    with np.errstate(over="raise", invalid="raise"):
        try:
            for i in range(1, N + 1):
                Y = times_whirl(Y, stream.factor(i))
        except FloatingPointError as err:
            raise OverflowError(f"window entries left the double range: {err}") from None
    if not np.all(np.isfinite(Y.entries)):
        raise OverflowError("window entries left the double range")
    return Y


def left_chevalley(Y: WindowMatrix, k: int, a: float) -> WindowMatrix:
    """u_k(a) Y: row k gains a times row k+1."""
    n = Y.n
    r = residue(k, n) - 1
    arr = Y.entries.copy()
    arr[r, 1:] += a * Y.entries[(r + 1) % n, :-1]
    return WindowMatrix(n, arr)


def right_chevalley(Y: WindowMatrix, k: int, a: float) -> WindowMatrix:
    """Y u_k(a): column j with j-1 = k mod n gains a times column j-1."""
    n = Y.n
    idx = _shift_index(n, Y.width)
    arr = Y.entries.copy()
    mask = idx[:, 1:] == residue(k, n) - 1
    arr[:, 1:] += np.where(mask, a * Y.entries[:, :-1], 0.0)
    return WindowMatrix(n, arr)


# -- limit ratios ----------------------------------------------------------------


@dataclass(frozen=True)
class LimitRatios:
    k: int
    eps: float
    phi: float
    converged: bool
    eps_trace: tuple[float, ...] = field(default=(), repr=False)
    phi_trace: tuple[float, ...] = field(default=(), repr=False)


def _settled(seq: Sequence[float], tol: float) -> bool:
    # three successive relative differences below tol
    if len(seq) < 4:
        return False
    tail = seq[-4:]
    return all(abs(b - a) < tol * abs(b) for a, b in zip(tail, tail[1:]))


def phi_sequence(Y: WindowMatrix, k: int) -> list[float]:
    r = residue(k, Y.n) - 1
    num = Y.entries[r, 1:]
    den = Y.entries[(r + 1) % Y.n, :-1]
    if np.any(den == 0):
        d = int(np.argmax(den == 0)) + 1
        raise ZeroDivisionError(f"phi_{k}: y_{{{k + 1},{k + d}}} is zero")
    return [float(v) for v in num / den]


def eps_sequence(Y: WindowMatrix, k: int) -> list[float]:
    n = Y.n
    out = []
    for d in range(Y.width):
        row = residue(k - d, n) - 1
        den = Y.entries[row, d]
        if den == 0:
            raise ZeroDivisionError(f"eps_{k}: y_{{{k - d},{k}}} is zero")
        out.append(float(Y.entries[row, d + 1] / den))
    return out


def limit_ratios(Y: WindowMatrix, k: int, tol: float = DEFAULT_TOL) -> LimitRatios:
    if Y.width < 8:
        raise ValueError("limit ratio estimation needs width >= 8")
    phis = phi_sequence(Y, k)
    epss = eps_sequence(Y, k)
    return LimitRatios(
        residue(k, Y.n), epss[-1], phis[-1],
        _settled(epss, tol) and _settled(phis, tol),
        tuple(epss), tuple(phis),
    )


def asym_stats(Y: WindowMatrix, tol: float = DEFAULT_TOL) -> dict[int, LimitRatios]:
    return {k: limit_ratios(Y, k, tol) for k in range(1, Y.n + 1)}


def asym_e(Y: WindowMatrix, k: int, c: float, tol: float = DEFAULT_TOL) -> WindowMatrix:
    """u_k((c-1) phi_k) Y u_k((1/c - 1) eps_k)."""
    if c == 0:
        raise ValueError("e_k^c needs c != 0")
    lr = limit_ratios(Y, k, tol)
    if not lr.converged:
        raise NotConvergedError(f"limit ratios at k={k} did not settle to {tol}")
    return right_chevalley(left_chevalley(Y, k, (c - 1) * lr.phi), k, (1 / c - 1) * lr.eps)


def update_phi(phi: Mapping[int, float], k: int, a: float, n: int) -> dict[int, float]:
    """phi family of u_k(a) Y from that of Y."""
    k = residue(k, n)
    out = {residue(j, n): v for j, v in phi.items()}
    below = residue(k - 1, n)
    if phi_k := out[k]:
        out[below] = out[below] / (1 + a / phi_k)
    elif a:
        raise ZeroDivisionError(f"phi_{k} is zero")
    out[k] = phi_k + a
    return out


def update_eps(eps: Mapping[int, float], k: int, a: float, n: int) -> dict[int, float]:
    """eps family of Y u_k(a) from that of Y."""
    k = residue(k, n)
    out = {residue(j, n): v for j, v in eps.items()}
    above = residue(k + 1, n)
    if eps_k := out[k]:
        out[above] = out[above] / (1 + a / eps_k)
    elif a:
        raise ZeroDivisionError(f"eps_{k} is zero")
    out[k] = eps_k + a
    return out


def rel_close(a: float, b: float, rtol: float) -> bool:
    return abs(a - b) <= rtol * max(abs(a), abs(b))


def check_asym_axioms(
    Y: WindowMatrix,
    c: float,
    c2: float,
    *,
    rtol_scalar: float = 1e-8,
    rtol_matrix: float = 1e-6,
    tol: float = DEFAULT_TOL,
) -> AxiomReport:
    """Relations (2)-(5) for the limit-ratio structure, at one window."""
    return check_crystal_axioms(
        Y, Y.n, c, c2,
        eps=lambda Z, k: limit_ratios(Z, k, tol).eps,
        gamma=lambda Z, k: (lambda lr: lr.phi / lr.eps)(limit_ratios(Z, k, tol)),
        act=lambda Z, k, cc: asym_e(Z, k, cc, tol),
        scalar_eq=lambda a, b: rel_close(a, b, rtol_scalar),
        obj_eq=lambda A, B: A.allclose(B, rtol_matrix),
        check_domain=False,
    )
