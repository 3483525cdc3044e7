"""Command-line front end.

    grasslog eval sv-trilog --z 0.5
    grasslog eval grass-trilog --config c.json --method both --budget 1000000
    grasslog verify --suite exact --seed 7
    grasslog table --z "1/2,-1,2"

Exit codes: 0 pass, 1 failed contract, 2 usage or parse error, 3 degenerate input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

from . import __version__, grasspoly, quad, suites
from .configspace import config_from_json
from .errors import DegenerateError, DomainError
from .polylog import bloch_wigner, sv_trilog

SCHEMA = "grasslog-report/1"
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DEGENERATE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def parse_complex(text: str) -> complex:
    """Accept ``0.5``, ``1/2``, ``-1``, ``1+i``, ``1+1j``, ``2.5-0.3i``."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty number")
    if "/" in s and "i" not in s and "j" not in s:
        return complex(float(Fraction(s)))
    s = s.replace("i", "j")
    if s in ("j", "+j", "-j"):
        s = s.replace("j", "1j")
    s = s.replace("+j", "+1j").replace("-j", "-1j")
    return complex(s)


def parse_z_list(text: str) -> list[str]:
    return [p for p in (q.strip() for q in text.split(",")) if p]


def _clean(x):
    return suites._clean(x)


def report(kind: str, payload: dict, args) -> dict:
    out = {"schema": SCHEMA, "version": __version__, "kind": kind,
           "orientation": quad.ORIENTATION_STANDARD, "convention": quad.CONVENTION}
    for key in ("seed", "budget"):
        if getattr(args, key, None) is not None:
            out[key] = getattr(args, key)
    out.update(payload)
    return _clean(out)


def emit(obj, args) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True, allow_nan=False) + "\n"
    _write(text, args)


def _write(text: str, args) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_config(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return config_from_json(json.load(fh))
    except (OSError, ValueError, TypeError) as exc:
        raise UsageError(f"cannot read configuration {path!r}: {exc}") from exc


# ----------------------------------------------------------------------------
# eval

def cmd_eval(args) -> int:
    what = args.function
    if what in ("sv-dilog", "sv-trilog", "special-stratum"):
        if args.z is None:
            raise UsageError(f"eval {what} needs --z")
        try:
            z = parse_complex(args.z)
        except ValueError as exc:
            raise UsageError(f"cannot parse --z {args.z!r}") from exc
        if what == "sv-dilog":
            payload = {"value": bloch_wigner(z)}
        elif what == "sv-trilog":
            payload = {"value": sv_trilog(z)}
        else:
            eps = grasspoly.DEFAULT_EPSILONS
            value, info = grasspoly.special_stratum_value(z, eps, details=True)
            payload = {"value": value, "sv_trilog": sv_trilog(z), "extrapolation": info}
        payload["z"] = z
        emit(report(f"eval.{what}", payload, args), args)
        return EXIT_OK

    if args.config is None:
        raise UsageError(f"eval {what} needs --config")
    cfg = _load_config(args.config)
    method = args.method or ("closed" if what == "grass-trilog" else "both")
    if what == "grass-dilog":
        budget = args.budget or 100_000
        payload = {}
        if method in ("closed", "both"):
            payload["closed"] = grasspoly.grass_dilog(cfg, "closed")
        if method in ("numeric", "both"):
            est = grasspoly.grass_dilog(cfg, "numeric", budget=budget, tol=args.tol or 1e-7)
            payload.update(value=est.value, sigma=est.sigma, samples=est.samples,
                           numeric=est.as_dict())
            if "closed" in payload:
                payload["residuals"] = {"weight2": est.value - payload["closed"]}
        else:
            payload["value"] = payload["closed"]
        args.budget = budget if method != "closed" else None
        emit(report("eval.grass-dilog", payload, args), args)
        return EXIT_OK

    # grass-trilog
    if method == "closed":
        rep = grasspoly.grass_trilog_closed(cfg)
        args.budget = None
    else:
        args.budget = args.budget or 5_000_000
        rep = grasspoly.grass_trilog_numeric(cfg, budget=args.budget, seed=args.seed)
    payload = rep.as_dict()
    if method == "numeric":
        payload["value"] = payload["numeric_scaled"]
        payload["sigma"] = payload["numeric_sigma_scaled"]
    else:
        payload["value"] = rep.closed
    if rep.numeric is not None:
        payload["samples"] = rep.numeric.samples
    emit(report("eval.grass-trilog", payload, args), args)
    return EXIT_OK


# ----------------------------------------------------------------------------
# verify

def cmd_verify(args) -> int:
    if args.suite not in suites.SUITES + ("all",):
        raise UsageError(f"unknown suite {args.suite!r}")
    cases = suites.run_suite(args.suite, seed=args.seed, budget=args.budget)
    passed = all(c.passed for c in cases)
    payload = {"suite": args.suite, "cases": len(cases), "passed": passed,
               "results": [c.as_dict() for c in cases]}
    emit(report("verify", payload, args), args)
    return EXIT_OK if passed else EXIT_FAIL


# ----------------------------------------------------------------------------
# table

TABLE_HEADER = ("z", "extrapolated_LG3", "L3", "difference")


def _fmt(x: float) -> str:
    return repr(float(x))


def cmd_table(args) -> int:
    rows = []
    for item in parse_z_list(args.z or ""):
        try:
            z = parse_complex(item)
        except ValueError as exc:
            raise UsageError(f"cannot parse z value {item!r}") from exc
        try:
            value = grasspoly.special_stratum_value(z)
        except (DomainError, DegenerateError) as exc:
            rows.append((item, "error", "error", type(exc).__name__))
            continue
        ref = sv_trilog(z)
        rows.append((item, _fmt(value), _fmt(ref), _fmt(value - ref)))
    if args.format == "json":
        keys = TABLE_HEADER
        emit(report("table", {"rows": [dict(zip(keys, r)) for r in rows]}, args), args)
        return EXIT_OK
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(TABLE_HEADER)
    w.writerows(rows)
    _write(buf.getvalue(), args)
    return EXIT_OK


# ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="grasslog", description="Grassmannian polylogarithms: evaluation and checks.")
    p.add_argument("--version", action="version", version=f"grasslog {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, budget_help):
        sp.add_argument("--seed", type=int, default=42, help="random seed (default 42)")
        sp.add_argument("--budget", type=int, default=None, help=budget_help)
        sp.add_argument("--out", default=None, help="write the report here instead of stdout")

    e = sub.add_parser("eval", help="evaluate one function")
    e.add_argument("function", choices=["sv-dilog", "sv-trilog", "grass-dilog", "grass-trilog",
                                        "special-stratum"])
    e.add_argument("--z", default=None, help="complex argument, e.g. 0.5, 1/2, 1+i")
    e.add_argument("--config", default=None, help="configuration JSON file")
    e.add_argument("--method", choices=["closed", "numeric", "both"], default=None)
    e.add_argument("--tol", type=float, default=None, help="CP^1 tolerance (default 1e-7)")
    e.add_argument("--format", choices=["json"], default="json")
    common(e, "sample budget (default 5e6 on CP^2, 1e5 on CP^1)")
    e.set_defaults(func=cmd_eval)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", default="all", help="exact | forms | functional | quadrature | all")
    v.add_argument("--format", choices=["json"], default="json")
    common(v, "override both quadrature budgets")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="special-stratum table")
    t.add_argument("--z", default="1/2,-1,2,1+i", help="comma-separated z values")
    t.add_argument("--format", choices=["csv", "json"], default="csv")
    t.add_argument("--out", default=None)
    t.set_defaults(func=cmd_table)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"grasslog: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DegenerateError as exc:
        print(f"grasslog: degenerate input: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except DomainError as exc:
        print(f"grasslog: domain error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
