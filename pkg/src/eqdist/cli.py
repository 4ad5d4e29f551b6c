"""Command-line front end.

Exit codes: 0 = success; 1 = input error (bad flags, malformed space string,
unreadable points file, inapplicable theorem); 2 = well-formed run with a
negative outcome (failed verification or certification, non-converged
search).  All numbers in reports are serialized with 17 significant digits
so that outputs are byte-stable, reproducible oracles.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys

from . import approx as approx_mod
from . import bounds as bounds_mod
from . import construct as construct_mod
from .certify import CertifyConfig
from .certify import certify as run_certify
from .errors import (CertificationError, DegenerateDistanceError, InputError,
                     NumericalError, ResourceLimitError)
from .space import PointSet, Space

FORMATS = ("json", "csv", "text")


def _fmt_float(x: float) -> str:
    if math.isnan(x) or math.isinf(x):
        return json.dumps(str(x))
    s = format(x, ".17g")
    if "." not in s and "e" not in s and "E" not in s:
        s += ".0"
    return s


def render_json(obj, indent: int = 0) -> str:
    pad, pad1 = " " * indent, " " * (indent + 2)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = (f"{pad1}{json.dumps(str(k))}: {render_json(v, indent + 2)}"
                 for k, v in obj.items())
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = (f"{pad1}{render_json(v, indent + 2)}" for v in obj)
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return json.dumps(obj)
    if isinstance(obj, float):
        return _fmt_float(obj)
    raise TypeError(f"cannot serialize {type(obj)}")


def _scalar(v) -> str:
    if isinstance(v, float):
        return format(v, ".17g")
    if isinstance(v, (dict, list, tuple)):
        return json.dumps(v)
    return str(v)


def render_csv(obj) -> str:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    if isinstance(obj, list):
        fields: list[str] = []
        for row in obj:
            for k in row:
                if k not in fields:
                    fields.append(k)
        w.writerow(fields)
        for row in obj:
            w.writerow([_scalar(row[k]) if k in row else "" for k in fields])
    else:
        w.writerow(["key", "value"])
        for k, v in obj.items():
            w.writerow([k, _scalar(v)])
    return out.getvalue()


def render_text(obj) -> str:
    if isinstance(obj, list):
        return "\n\n".join(render_text(row) for row in obj)
    return "\n".join(f"{k}: {_scalar(v)}" for k, v in obj.items())


def emit(obj, fmt: str) -> None:
    if fmt == "json":
        print(render_json(obj))
    elif fmt == "csv":
        print(render_csv(obj), end="")
    else:
        print(render_text(obj))


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        raise InputError(message)


def _build_parser() -> _Parser:
    top = _Parser(prog="eqdist", description=__doc__.splitlines()[0]
                  if __doc__ else "")
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--format", choices=FORMATS, default="json")
        return p

    p = add("bound", "enumerate applicable bounds for a space")
    p.add_argument("--space", required=True)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--best", action="store_true",
                   help="report only the best concrete upper bound")
    p.add_argument("--c", type=float, default=None,
                   help="override the absolute constant c")

    p = add("construct", "emit one of the built-in equilateral configurations")
    p.add_argument("kind", choices=["cross-polytope", "lp-simplex",
                                    "euclidean-simplex", "product"])
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--a", type=int, default=None)
    p.add_argument("--b", type=int, default=None)

    p = add("verify", "check that a point-set file is unit-equilateral")
    p.add_argument("--points", required=True)
    p.add_argument("--tol", type=float, default=1e-7)

    p = add("certify", "run a rank-certificate pipeline on a point-set file")
    p.add_argument("--points", required=True)
    p.add_argument("--theorem", required=True,
                   choices=["thm1", "thm2", "thm3", "thm4", "thm5"])
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--c", type=float, default=None)

    p = add("approx", "certified even-polynomial approximation of |x|^p")
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--d", type=int, required=True)

    p = add("search", "numerical search for an equilateral witness")
    p.add_argument("--space", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--restarts", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--target", type=float, default=1e-10)
    return top


def _load_points(path: str) -> PointSet:
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as e:
        raise InputError(f"unreadable points file {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise InputError(f"points file {path} is not valid JSON: {e}") from e
    return PointSet.from_jsonable(obj)


def _env_config() -> bounds_mod.BoundConfig:
    path = os.environ.get("EQD_CONFIG")
    if path:
        return bounds_mod.load_config(path)
    return bounds_mod.BoundConfig()


def _cmd_bound(args) -> int:
    space = Space.from_string(args.space)
    cfg = _env_config()
    if args.c is not None:
        cfg.c_absolute = args.c
    if args.best:
        emit(bounds_mod.best_explicit_upper(space, args.s, cfg).to_jsonable(), args.format)
    else:
        reports = bounds_mod.enumerate_bounds(space, args.s, cfg)
        emit([r.to_jsonable() for r in reports], args.format)
    return 0


def _cmd_construct(args) -> int:
    kind = args.kind
    if kind == "product":
        if args.a is None or args.b is None:
            raise InputError("product needs --a and --b")
        ps = construct_mod.product_construction(
            construct_mod.euclidean_simplex(args.a),
            construct_mod.euclidean_simplex(args.b))
    elif kind == "cross-polytope":
        if args.n is None:
            raise InputError("cross-polytope needs --n")
        ps = construct_mod.cross_polytope(args.n)
    elif kind == "lp-simplex":
        if args.n is None or args.p is None:
            raise InputError("lp-simplex needs --n and --p")
        ps = construct_mod.lp_simplex(args.n, args.p)
    else:
        if args.n is None:
            raise InputError("euclidean-simplex needs --n")
        ps = construct_mod.euclidean_simplex(args.n)
    emit(ps.to_jsonable(), args.format)
    return 0


def _cmd_verify(args) -> int:
    ps = _load_points(args.points)
    report = {"space": ps.space.to_string(), "m": ps.m}
    if ps.m == 1:
        report.update(profile=[], equilateral=True, max_deviation=0.0)
        emit(report, args.format)
        return 0
    try:
        profile = construct_mod.distance_profile(ps, args.tol)
    except DegenerateDistanceError as e:
        report.update(profile=None, equilateral=False, error=str(e))
        emit(report, args.format)
        print(str(e), file=sys.stderr)
        return 2
    dev = max(abs(d - 1.0) for d in profile)
    ok = len(profile) == 1 and dev <= args.tol
    report.update(profile=profile, equilateral=ok, max_deviation=dev)
    emit(report, args.format)
    if not ok:
        print(f"not unit-equilateral: profile {profile}", file=sys.stderr)
        return 2
    return 0


def _cmd_certify(args) -> int:
    ps = _load_points(args.points)
    cfg = CertifyConfig(c=args.c, k=args.k, p_override=args.p)
    env = os.environ.get("EQD_CONFIG")
    if env:
        cfg.c_absolute = bounds_mod.load_config(env).c_absolute
    report = run_certify(ps, args.theorem, cfg)
    emit(report.to_jsonable(), args.format)
    if not report.passes:
        print(f"certificate for {args.theorem} did not pass", file=sys.stderr)
        return 2
    return 0


def _cmd_approx(args) -> int:
    P, cert = approx_mod.approximate_abs_power(args.p, args.d)
    emit({"p": cert.p, "d": cert.d, "coefficients": list(P.even_coeffs),
          "measured_error": cert.measured_error,
          "jackson_bound": cert.jackson_bound}, args.format)
    return 0


def _cmd_search(args) -> int:
    space = Space.from_string(args.space)
    cfg = construct_mod.SearchConfig(restarts=args.restarts, seed=args.seed,
                                     residual_target=args.target)
    res = construct_mod.search_equilateral(space, args.m, cfg)
    out = res.points.to_jsonable()
    out.update(residual=res.residual, converged=res.converged,
               restart_index=res.restart_index)
    emit(out, args.format)
    if not res.converged:
        print(f"search did not converge: residual {res.residual:.6g}", file=sys.stderr)
        return 2
    return 0


_COMMANDS = {"bound": _cmd_bound, "construct": _cmd_construct,
             "verify": _cmd_verify, "certify": _cmd_certify,
             "approx": _cmd_approx, "search": _cmd_search}


def run(argv: list[str]) -> int:
    """Parse argv and dispatch; returns the process exit code."""
    try:
        args = _build_parser().parse_args(argv)
        return _COMMANDS[args.command](args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (CertificationError, DegenerateDistanceError) as e:
        print(f"failed: {e}", file=sys.stderr)
        return 2
    except (ResourceLimitError, NumericalError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
