"""Command line: ``loopcrystal {verify,eval,apply,matrix,limits}``.

Exit codes: 0 success, 1 identity failure or pole, 2 usage/schema error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import asymptotic as asy
from .crystal import product_e
from .exact import PoleError, poly_eval, residue
from .jsonio import (
    SchemaError,
    dumps,
    matrix_from_json,
    matrix_to_json,
    point_from_json,
    point_to_json,
    rational_from_json,
    rational_to_json,
    shape_from_json,
)
from .loopsym import energy, loop_e, tableaux_schur
from .ucrystal import UCrystalContext, u_e
from .verify import SUITES, ConfigError, SuiteConfig, run_suite
from .whirl import from_factors, render, window


class UsageError(Exception):
    pass


def _int_range(text: str) -> tuple[int, ...]:
    """``"2..4"``, ``"3"`` or ``"2,3,5"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return tuple(range(int(lo), int(hi) + 1))
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer range: {text!r}") from None


def _read_request(source: str):
    try:
        text = sys.stdin.read() if source == "-" else open(source).read()
    except OSError as err:
        raise UsageError(f"cannot read {source}: {err}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise SchemaError(f"invalid JSON: {err}") from None


def _field(req, key):
    if not isinstance(req, dict) or key not in req:
        raise SchemaError(f"missing field {key!r}")
    return req[key]


def _int_field(req, key) -> int:
    v = _field(req, key)
    if not isinstance(v, int) or isinstance(v, bool):
        raise SchemaError(f"field {key!r} must be an integer")
    return v


def _point(req):
    # a bare ProductPoint is accepted as well as {"point": ...}
    if isinstance(req, dict) and "point" in req:
        return point_from_json(req["point"])
    return point_from_json(req)


# -- commands ------------------------------------------------------------------------


def cmd_eval(req) -> dict:
    kind = _field(req, "kind")
    x = _point(req)
    n, m = x.n, x.m
    if kind == "energy":
        p = energy(n, m)
    elif kind == "schur":
        shape = shape_from_json(_field(req, "shape"))
        p = tableaux_schur(shape, residue(_int_field(req, "r"), n), n, m)
    elif kind == "e":
        p = loop_e(_int_field(req, "r"), residue(_int_field(req, "s"), n), n, m)
    else:
        raise SchemaError(f"unknown kind {kind!r}; expected schur, energy or e")
    return {"kind": kind, "value": rational_to_json(poly_eval(p, x.assignment()))}


def cmd_apply(req) -> dict:
    target = _field(req, "target")
    k = _int_field(req, "k")
    c = rational_from_json(_field(req, "c"))
    if c == 0:
        raise SchemaError("c must be nonzero")
    if target == "point":
        return point_to_json(product_e(_point(req), k, c))
    if target == "matrix":
        Y = matrix_from_json(_field(req, "matrix"))
        m = req.get("m", Y.band)
        if not isinstance(m, int) or isinstance(m, bool) or m < 1:
            raise SchemaError("m must be a positive integer")
        if Y.n < 2:
            raise SchemaError("n must be at least 2")
        return matrix_to_json(u_e(Y, k, c, UCrystalContext(Y.n, m)))
    raise SchemaError(f"unknown target {target!r}; expected point or matrix")


def _window_ranges(args, Y):
    rows = range(args.rows[0], args.rows[1] + 1) if args.rows else range(1, Y.n + 1)
    cols = range(args.cols[0], args.cols[1] + 1) if args.cols else range(rows.start, rows.stop + Y.band)
    return rows, cols


def cmd_matrix(req, args):
    if isinstance(req, dict) and "diagonals" in req:
        Y = matrix_from_json(req)
    else:
        Y = from_factors(_point(req))
    rows, cols = _window_ranges(args, Y)
    out = matrix_to_json(Y)
    out["window"] = {
        "rows": [rows.start, rows.stop - 1],
        "cols": [cols.start, cols.stop - 1],
        "entries": [[rational_to_json(v) for v in row] for row in window(Y, rows, cols)],
    }
    return out, render(Y, rows, cols)


def cmd_limits(args) -> list[dict]:
    a = tuple(float(v) for v in args.a.split(",")) if args.a else (1.0,) * args.n
    if len(a) != args.n:
        raise UsageError(f"--a needs {args.n} values")
    curl = tuple(float(v) for v in args.curl.split(",")) if args.curl else None
    try:
        stream = asy.WhirlStream(a, args.q, curl)
        Y = asy.truncated_product(stream, args.factors, args.width)
    except ValueError as err:
        raise UsageError(str(err)) from None
    out = []
    for k in range(1, args.n + 1):
        try:
            lr = asy.limit_ratios(Y, k, args.tol)
            out.append({"k": k, "eps": lr.eps, "phi": lr.phi, "converged": lr.converged})
        except ZeroDivisionError as err:
            out.append({"k": k, "error": "division-by-zero", "detail": str(err), "converged": False})
    return out


# -- parser --------------------------------------------------------------------------


def _pair(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    def flags(suppress: bool) -> argparse.ArgumentParser:
        # subcommands repeat the global flags without defaults, so a flag given
        # before the subcommand is not overwritten
        p = argparse.ArgumentParser(add_help=False)
        dflt = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
        p.add_argument("--seed", type=int, default=dflt(0), help="seed for random sampling (default 0)")
        p.add_argument("--json", action="store_true", default=dflt(False), help="machine-readable output")
        p.add_argument("--quiet", action="store_true", default=dflt(False), help="suppress output; rely on the exit code")
        return p

    common = flags(suppress=True)
    parser = argparse.ArgumentParser(prog="loopcrystal", description=__doc__.splitlines()[0], parents=[flags(False)])
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("suite", choices=SUITES + ("all",))
    v.add_argument("--n", type=_int_range, help="n values, e.g. 2..4")
    v.add_argument("--m", type=_int_range, help="m values, e.g. 1..5")
    v.add_argument("--trials", type=int, default=10)
    v.add_argument("--tol", type=float, default=asy.DEFAULT_TOL)
    v.add_argument("--max-cells", type=int, default=6, help="largest |λ/μ| in the shape family")
    v.add_argument("--stream", choices=("curl", "whirl"), default="curl")

    for name, what in (("eval", "evaluate a loop Schur function, energy or e_r^(s)"),
                       ("apply", "apply e_k^c to a point or a matrix"),
                       ("matrix", "show M(x) or a matrix window")):
        p = sub.add_parser(name, parents=[common], help=what)
        p.add_argument("request", nargs="?", default="-", help="JSON file (default: stdin)")
        if name == "matrix":
            p.add_argument("--rows", type=_pair, help="row range LO:HI")
            p.add_argument("--cols", type=_pair, help="column range LO:HI")

    lim = sub.add_parser("limits", parents=[common], help="estimate limit ratios of a whirl stream")
    lim.add_argument("--n", type=int, default=2)
    lim.add_argument("--q", type=float, default=0.5)
    lim.add_argument("--a", help="comma-separated stream amplitudes a^(1..n)")
    lim.add_argument("--curl", help="comma-separated curl parameters (optional leading curl)")
    lim.add_argument("--width", type=int, default=60)
    lim.add_argument("--factors", type=int, default=120)
    lim.add_argument("--tol", type=float, default=asy.DEFAULT_TOL)
    return parser


def _emit(args, text: str) -> None:
    if not args.quiet:
        print(text)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "verify":
            cfg = SuiteConfig(
                args.suite, seed=args.seed, n_range=args.n, m_range=args.m,
                trials=args.trials, tol=args.tol, max_cells=args.max_cells, stream=args.stream,
            )
            report = run_suite(cfg)
            if args.json:
                _emit(args, dumps(report.to_json()))
            else:
                lines = [f"{'PASS' if c['pass'] else 'FAIL'}  {c['key']}  ({c['checked']} checks)" for c in report.cases]
                lines.append(f"{report.to_json()['passed']} passed, {report.to_json()['failed']} failed")
                _emit(args, "\n".join(lines))
            return report.exit_code
        if args.command == "limits":
            rows = cmd_limits(args)
            if args.json:
                _emit(args, dumps(rows))
            else:
                _emit(args, "\n".join(
                    f"k={r['k']}  " + (f"eps={r['eps']:.17g}  phi={r['phi']:.17g}  converged={r['converged']}"
                                       if "eps" in r else f"error: {r['detail']}")
                    for r in rows
                ))
            return 0 if all(r["converged"] for r in rows) else 1
        req = _read_request(args.request)
        if args.command == "eval":
            out = cmd_eval(req)
            _emit(args, dumps(out) if args.json else out["value"])
        elif args.command == "apply":
            _emit(args, dumps(cmd_apply(req)))
        elif args.command == "matrix":
            out, text = cmd_matrix(req, args)
            _emit(args, dumps(out) if args.json else text)
        return 0
    except PoleError as err:
        _emit(args, dumps({"error": "pole", "denominator": err.denominator}))
        return 1
    except (SchemaError, ConfigError) as err:
        print(dumps({"error": "schema", "detail": str(err)}), file=sys.stderr)
        return 2
    except UsageError as err:
        print(f"loopcrystal: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
