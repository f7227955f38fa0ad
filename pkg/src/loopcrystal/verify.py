"""Randomised exact verification suites with reproducible JSON reports.

Randomness comes from :class:`random.Random` (MT19937), seeded with the
string ``"<seed>:<suite>"`` (hashed with SHA-512 by CPython), so every suite
draws the same points for the same seed on every platform.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import product
from typing import Callable, Iterator

from . import asymptotic as asy
from .crystal import check_axioms, product_e, product_stats, random_point
from .exact import poly_eval, random_rational, residue
from .jsonio import point_to_json, rational_to_json, shape_to_json
from .loopsym import (
    SkewShape,
    energy,
    jacobi_trudi_schur,
    loop_e,
    schur_pushforward,
    tableaux_schur,
)
from .rmatrix import apply_s, apply_word, orbit
from .ucrystal import UCrystalContext, quotient_check, thm_e_case, thm_e_image, u_e, u_stats
from .whirl import entry, from_factors

SUITES = (
    "axioms",
    "rmatrix",
    "whirl-entry",
    "quotient",
    "thm-e",
    "jacobi-trudi",
    "schur-action",
    "energy",
    "asymptotic",
)


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SuiteConfig:
    suite: str
    seed: int = 0
    n_range: tuple[int, ...] | None = None
    m_range: tuple[int, ...] | None = None
    trials: int = 100
    tol: float = asy.DEFAULT_TOL
    max_cells: int = 8
    max_part: int = 4
    max_rows: int = 4
    width: int = 60
    factors: int = 120
    q: float = 0.5
    stream: str = "curl"

    def validate(self) -> None:
        if self.suite not in SUITES + ("all",):
            raise ConfigError(f"unknown suite {self.suite!r}")
        if self.n_range is not None and (not self.n_range or min(self.n_range) < 2):
            raise ConfigError("n > 1 is required")
        if self.m_range is not None and (not self.m_range or min(self.m_range) < 1):
            raise ConfigError("m >= 1 is required")
        if self.trials < 1:
            raise ConfigError("trials must be positive")
        if self.stream not in ("curl", "whirl"):
            raise ConfigError("stream must be 'curl' or 'whirl'")
        if not 0 <= self.q < 1:
            raise ConfigError("q must lie in [0, 1)")
        if self.width < 8 or self.factors < self.width:
            raise ConfigError("need width >= 8 and factors >= width")


# default (n, m) ranges per suite
_DEFAULT_N = {"jacobi-trudi": (2, 3), "schur-action": (2, 3), "energy": (2, 3), "asymptotic": (3, 4)}
_DEFAULT_M = {
    "whirl-entry": (1, 2, 3, 4, 5),
    "rmatrix": (2, 3, 4),
    "jacobi-trudi": (2, 3, 4),
    "schur-action": (2, 3, 4),
    "energy": (2, 3),
}


def _ranges(cfg: SuiteConfig) -> tuple[tuple[int, ...], tuple[int, ...]]:
    ns = cfg.n_range or _DEFAULT_N.get(cfg.suite, (2, 3, 4))
    ms = cfg.m_range or _DEFAULT_M.get(cfg.suite, (1, 2, 3, 4))
    return tuple(ns), tuple(ms)


def _rng(cfg: SuiteConfig) -> random.Random:
    return random.Random(f"{cfg.seed}:{cfg.suite}")


def _param(rng: random.Random) -> Fraction:
    return random_rational(rng)


@dataclass
class Case:
    key: str
    identity: str
    checked: int = 0
    failures: list[dict] = field(default_factory=list)

    def record(self, ok: bool, reproducer: Callable[[], dict]) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(reproducer())

    def to_json(self) -> dict:
        out = {"key": self.key, "identity": self.identity, "checked": self.checked, "pass": not self.failures}
        if self.failures:
            out["failures"] = self.failures[:5]
            out["failure_count"] = len(self.failures)
        return out


def _safe(fn: Callable[[], bool]) -> bool:
    try:
        return bool(fn())
    except ArithmeticError:
        return False


# -- suites ------------------------------------------------------------------------


def suite_axioms(cfg: SuiteConfig) -> Iterator[Case]:
    rng = _rng(cfg)
    ns, ms = _ranges(cfg)
    for n, m in product(ns, ms):
        case = Case(f"axioms n={n} m={m}", "geometric crystal axioms (1)-(5) on X_M^m")
        for _ in range(cfg.trials):
            x, c, c2 = random_point(rng, n, m), _param(rng), _param(rng)
            report = check_axioms(x, c, c2)
            case.record(
                report.all_passed,
                lambda: {
                    "point": point_to_json(x),
                    "c": rational_to_json(c),
                    "c2": rational_to_json(c2),
                    "failed": [f"({r.axiom}) i={r.i} j={r.j} {r.status}" for r in report.failures()],
                },
            )
        yield case


def suite_rmatrix(cfg: SuiteConfig) -> Iterator[Case]:
    rng = _rng(cfg)
    ns, ms = _ranges(cfg)
    for n, m in product(ns, ms):
        if m < 2:
            continue
        cases = {
            name: Case(f"rmatrix {name} n={n} m={m}", ident)
            for name, ident in [
                ("involution", "s_j s_j = id"),
                ("braid", "s_j s_j+1 s_j = s_j+1 s_j s_j+1"),
                ("commute", "s_j s_l = s_l s_j, |j-l| >= 2"),
                ("whirl-commute", "M(x) = M(s_j x)"),
                ("equivariance", "s_j e_k^c = e_k^c s_j and stats preserved"),
                ("orbit", "loop e_r^(s) constant on the S_m orbit"),
            ]
        }
        for _ in range(cfg.trials):
            x = random_point(rng, n, m)
            k, c = rng.randint(1, n), _param(rng)
            rep = lambda: {"point": point_to_json(x), "k": k, "c": rational_to_json(c)}
            Mx = from_factors(x)
            for j in range(1, m):
                cases["involution"].record(_safe(lambda: apply_s(j, apply_s(j, x)) == x), rep)
                cases["whirl-commute"].record(_safe(lambda: from_factors(apply_s(j, x)) == Mx), rep)
                cases["equivariance"].record(
                    _safe(
                        lambda: apply_s(j, product_e(x, k, c)) == product_e(apply_s(j, x), k, c)
                        and product_stats(apply_s(j, x), k) == product_stats(x, k)
                    ),
                    rep,
                )
                if j + 1 < m:
                    cases["braid"].record(
                        _safe(lambda: apply_word([j, j + 1, j], x) == apply_word([j + 1, j, j + 1], x)), rep
                    )
                for l in range(j + 2, m):
                    cases["commute"].record(_safe(lambda: apply_word([j, l], x) == apply_word([l, j], x)), rep)
            if m <= 4:
                values = [
                    tuple(entry(from_factors(y), s, s + r) for r in range(1, m + 1) for s in range(1, n + 1))
                    for y in orbit(x)
                ]
                cases["orbit"].record(len(set(values)) == 1, rep)
        yield from (c for c in cases.values() if c.checked)


def suite_whirl_entry(cfg: SuiteConfig) -> Iterator[Case]:
    rng = _rng(cfg)
    ns, ms = _ranges(cfg)
    for n, m in product(ns, ms):
        case = Case(f"whirl-entry n={n} m={m}", "M(x)_{i,i+r} = e_r^(i)(x)")
        for _ in range(cfg.trials):
            x = random_point(rng, n, m)
            Y, point = from_factors(x), x.assignment()
            ok = all(
                entry(Y, i, i + r) == poly_eval(loop_e(r, i, n, m), point)
                for i in range(1, n + 1)
                for r in range(0, m + 2)
            )
            ok = ok and Y.band == m
            case.record(ok, lambda: {"point": point_to_json(x)})
        yield case


def suite_quotient(cfg: SuiteConfig) -> Iterator[Case]:
    rng = _rng(cfg)
    ns, ms = _ranges(cfg)
    for n, m in product(ns, ms):
        case = Case(f"quotient n={n} m={m}", "M(e_k^c x) = e_k^c M(x), entries by the four-case rule")
        for _ in range(cfg.trials):
            x, k, c = random_point(rng, n, m), rng.randint(1, n), _param(rng)
            res = quotient_check(x, k, c)
            case.record(
                res.ok,
                lambda: {"point": point_to_json(x), "k": k, "c": rational_to_json(c), "mismatches": list(res.mismatches)},
            )
        yield case


def suite_thm_e(cfg: SuiteConfig) -> Iterator[Case]:
    rng = _rng(cfg)
    ns, ms = _ranges(cfg)
    for n, m in product(ns, ms):
        ratios = Case(f"thm-e ratios n={n} m={m}", "eps, phi, gamma as ratios of e_m, e_m-1")
        by_case = {i: Case(f"thm-e case{i} n={n} m={m}", f"four-case action, case {i}") for i in (1, 2, 3, 4)}
        ctx = UCrystalContext(n, m)
        for _ in range(cfg.trials):
            x, k, c = random_point(rng, n, m), rng.randint(1, n), _param(rng)
            point = x.assignment()
            rep = lambda: {"point": point_to_json(x), "k": k, "c": rational_to_json(c)}

            def e(r, s):
                return poly_eval(loop_e(r, residue(s, n), n, m), point)

            want = (e(m, k + 1) / e(m - 1, k + 1), e(m, k) / e(m - 1, k + 1), e(m, k) / e(m, k + 1))
            Y = from_factors(x)
            ratios.record(product_stats(x, k) == want and u_stats(Y, k, ctx) == want[:2], rep)
            moved = u_e(Y, k, c, ctx)
            for r in range(1, m + 1):
                for s in range(1, n + 1):
                    i = thm_e_case(r, s, k, m, n)
                    by_case[i].record(entry(moved, s, s + r) == thm_e_image(r, s, k, c, x), rep)
        yield ratios
        yield from (cs for cs in by_case.values() if cs.checked)


def shape_family(max_part: int = 4, max_rows: int = 4, max_cells: int = 8) -> list[SkewShape]:
    """All λ/μ with λ_1 <= max_part, len(λ) <= max_rows, |λ/μ| <= max_cells."""

    def parts(prefix):
        yield tuple(prefix)
        if len(prefix) < max_rows:
            for p in range(1, (prefix[-1] if prefix else max_part) + 1):
                yield from parts(prefix + [p])

    ps = list(parts([]))
    out = []
    for lam in ps:
        if not lam:
            continue
        for mu in ps:
            if len(mu) <= len(lam) and all(a <= b for a, b in zip(mu, lam)) and sum(lam) - sum(mu) <= max_cells:
                out.append(SkewShape(lam, mu))
    return out


def _shape_key(shape: SkewShape) -> str:
    return f"{list(shape.lam)}/{list(shape.mu)}"


def suite_jacobi_trudi(cfg: SuiteConfig) -> Iterator[Case]:
    ns, ms = _ranges(cfg)
    shapes = shape_family(cfg.max_part, cfg.max_rows, cfg.max_cells)
    for n, m in product(ns, ms):
        case = Case(f"jacobi-trudi n={n} m={m}", "tableaux sum = Jacobi-Trudi determinant (polynomial equality)")
        for shape in shapes:
            for r in range(1, n + 1):
                case.record(
                    tableaux_schur(shape, r, n, m) == jacobi_trudi_schur(shape, r, n, m),
                    lambda: {"shape": shape_to_json(shape), "r": r},
                )
        yield case


def suite_schur_action(cfg: SuiteConfig) -> Iterator[Case]:
    rng = _rng(cfg)
    ns, ms = _ranges(cfg)
    shapes = shape_family(cfg.max_part, cfg.max_rows, cfg.max_cells)
    cases = {nm: Case(f"schur-action n={nm[0]} m={nm[1]}", "corner-removal expansion = direct evaluation") for nm in product(ns, ms)}
    for shape in shapes:
        for _ in range(cfg.trials):
            n, m = rng.choice(ns), rng.choice(ms)
            r, k = rng.randint(1, n), rng.randint(1, n)
            x, c = random_point(rng, n, m), _param(rng)
            ok = _safe(
                lambda: schur_pushforward(shape, r, k, c, x)
                == poly_eval(tableaux_schur(shape, r, n, m), product_e(x, k, c).assignment())
            )
            cases[(n, m)].record(
                ok,
                lambda: {"shape": shape_to_json(shape), "r": r, "k": k, "c": rational_to_json(c), "point": point_to_json(x)},
            )
    yield from (c for c in cases.values() if c.checked)


def suite_energy(cfg: SuiteConfig) -> Iterator[Case]:
    rng = _rng(cfg)
    ns, ms = _ranges(cfg)
    for n, m in product(ns, ms):
        D = energy(n, m)
        inv = Case(f"energy invariance n={n} m={m}", "D_B(e_k^c x) = D_B(x), k != 0 mod n")
        wit = Case(f"energy witness n={n} m={m}", "D_B moves under e_0^c at some sampled point")
        moved = None
        for _ in range(cfg.trials):
            x, c = random_point(rng, n, m), _param(rng)
            base = poly_eval(D, x.assignment())
            for k in range(1, n):
                inv.record(
                    poly_eval(D, product_e(x, k, c).assignment()) == base,
                    lambda: {"point": point_to_json(x), "k": k, "c": rational_to_json(c)},
                )
            if moved is None and c != 1 and m > 1:
                after = poly_eval(D, product_e(x, n, c).assignment())
                if after != base:
                    moved = {"point": point_to_json(x), "c": rational_to_json(c), "before": rational_to_json(base), "after": rational_to_json(after)}
        yield inv
        if m > 1:
            wit.checked = 1
            if moved is None:
                wit.failures.append({"reason": "no sampled point moved D_B under e_0^c"})
            yield wit


def _stream(cfg: SuiteConfig, rng: random.Random, n: int) -> asy.WhirlStream:
    a = tuple(rng.randint(1, 20) / 10 for _ in range(n))
    curl = tuple(rng.randint(3, 9) / 10 for _ in range(n)) if cfg.stream == "curl" else None
    return asy.WhirlStream(a, cfg.q, curl)


def suite_asymptotic(cfg: SuiteConfig) -> Iterator[Case]:
    rng = _rng(cfg)
    ns, _ = _ranges(cfg)
    for n in ns:
        label = f"asymptotic {cfg.stream} n={n}"
        conv = Case(f"{label} converge", f"limit ratios settle to {cfg.tol}")
        ax = Case(f"{label} axioms", "relations (2)-(5) for limit ratios")
        tables = Case(f"{label} update-tables", "phi/eps update rules vs recomputation")
        invariance = Case(f"{label} one-sided", "phi(Y u_k(a)) = phi(Y), eps(u_k(a) Y) = eps(Y)")
        for _ in range(max(1, cfg.trials // 10)):
            stream = _stream(cfg, rng, n)
            c, c2 = rng.randint(2, 30) / 10, rng.randint(2, 30) / 10
            a = rng.uniform(0.01, 2.0)
            rep = lambda: {"a": list(stream.a), "q": stream.q, "curl": list(stream.curl or []), "c": c, "c2": c2}
            try:
                Y = asy.truncated_product(stream, cfg.factors, cfg.width)
                stats = asy.asym_stats(Y, cfg.tol)
            except ArithmeticError as err:
                failed = {**rep(), "error": str(err)}
                for cs in (conv, ax, tables, invariance):
                    cs.record(False, lambda: failed)
                continue
            converged = all(s.converged for s in stats.values())
            conv.record(converged, rep)
            if not converged:
                continue
            ax.record(asy.check_asym_axioms(Y, c, c2, tol=cfg.tol).all_passed, rep)
            phi = {k: s.phi for k, s in stats.items()}
            eps = {k: s.eps for k, s in stats.items()}
            for k in range(1, n + 1):
                left = asy.asym_stats(asy.left_chevalley(Y, k, a), cfg.tol)
                right = asy.asym_stats(asy.right_chevalley(Y, k, a), cfg.tol)
                want_phi, want_eps = asy.update_phi(phi, k, a, n), asy.update_eps(eps, k, a, n)
                tables.record(
                    all(asy.rel_close(left[j].phi, want_phi[j], 1e-6) for j in phi)
                    and all(asy.rel_close(right[j].eps, want_eps[j], 1e-6) for j in eps),
                    lambda: {**rep(), "k": k, "a": a},
                )
                invariance.record(
                    all(asy.rel_close(right[j].phi, phi[j], 1e-8) for j in phi)
                    and all(asy.rel_close(left[j].eps, eps[j], 1e-8) for j in eps),
                    lambda: {**rep(), "k": k, "a": a},
                )
        yield from (cs for cs in (conv, ax, tables, invariance) if cs.checked)


_RUNNERS = {
    "axioms": suite_axioms,
    "rmatrix": suite_rmatrix,
    "whirl-entry": suite_whirl_entry,
    "quotient": suite_quotient,
    "thm-e": suite_thm_e,
    "jacobi-trudi": suite_jacobi_trudi,
    "schur-action": suite_schur_action,
    "energy": suite_energy,
    "asymptotic": suite_asymptotic,
}


@dataclass
class SuiteReport:
    suite: str
    seed: int
    cases: list[dict]

    @property
    def passed(self) -> bool:
        return all(c["pass"] for c in self.cases)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "passed": sum(c["pass"] for c in self.cases),
            "failed": sum(not c["pass"] for c in self.cases),
            "cases": self.cases,
        }


def run_suite(cfg: SuiteConfig) -> SuiteReport:
    cfg.validate()
    names = SUITES if cfg.suite == "all" else (cfg.suite,)
    cases = []
    for name in names:
        cases.extend(c.to_json() for c in _RUNNERS[name](replace(cfg, suite=name)))
    cases.sort(key=lambda c: c["key"])
    return SuiteReport(cfg.suite, cfg.seed, cases)
