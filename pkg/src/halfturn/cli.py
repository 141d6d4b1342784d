"""Command-line entry point.

Exit codes: 0 success, 1 a verification or proof failed, 2 invalid input.
Set ``HALFTURN_COLOR=1`` to colour PASS/FAIL in text output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .centers import CENTER_NAMES, SideLengths, center
from .constructions import build_configuration
from .embed import DEFAULT_TRIANGLE, CartesianTriangle, render_svg
from .errors import GeometryError, ProofFailed
from .kernel import BaryPoint, parse_rational
from .symbolic import THEOREMS, prove_theorem, sym_configuration
from .verify import run_suite, suite_points, verify_all


class InputError(Exception):
    pass


def _color(ok: bool) -> str:
    word = "PASS" if ok else "FAIL"
    if os.environ.get("HALFTURN_COLOR") == "1":
        return f"\033[{32 if ok else 31}m{word}\033[0m"
    return word


def _point(text: str) -> BaryPoint:
    try:
        return BaryPoint.parse(text)
    except (ValueError, GeometryError) as exc:
        raise InputError(f"bad point literal {text!r}: {exc}") from None


def _emit(text: str, out: str | None = None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_config(args) -> int:
    cfg = build_configuration(_point(args.p))
    if args.json:
        text = json.dumps(cfg.to_dict(), indent=2) + "\n"
    else:
        text = "".join(f"{k:<5} {v}\n" for k, v in cfg.to_dict().items())
    _emit(text, args.out)
    return 0


def cmd_verify(args) -> int:
    if args.p is not None:
        reports = [verify_all(_point(args.p))]
    else:
        if args.bound < 2 or args.random < 0:
            raise InputError("--random must be >= 0 and --bound >= 2")
        reports = run_suite(suite_points(args.seed, args.random, args.bound))
    ok = all(r.passed for r in reports)
    if args.json:
        sys.stdout.write(json.dumps([r.to_dict() for r in reports], indent=2) + "\n")
    else:
        for r in reports:
            sys.stdout.write(f"{_color(r.passed)}  P={r.p}  ({len(r.claims)} claims)\n")
            for c in r.failures():
                sys.stdout.write(f"    {c.id}: {c.witness or ''}\n")
        n_claims = sum(len(r.claims) for r in reports)
        sys.stdout.write(f"{len(reports)} points, {n_claims} claims: {_color(ok)}\n")
    return 0 if ok else 1


def cmd_prove(args) -> int:
    names = [args.theorem] if args.theorem else list(THEOREMS)
    for n in names:
        if n not in THEOREMS:
            raise InputError(f"unknown theorem {n!r}; choose from {', '.join(THEOREMS)}")
    cfg = sym_configuration()
    reports, ok = [], True
    for n in names:
        try:
            reports.append(prove_theorem(n, cfg))
        except ProofFailed as exc:
            reports.append(exc.report)
            ok = False
    if args.json:
        sys.stdout.write(json.dumps([r.to_dict() for r in reports], indent=2) + "\n")
    else:
        for r in reports:
            sys.stdout.write(f"{r.theorem}: {r.status}\n")
            for i in r.identities:
                mark = "0" if i.vanishes else "NONZERO"
                sys.stdout.write(f"    [{mark}] deg<={i.degree}  {i.label}\n")
    return 0 if ok else 1


def _vertices(values) -> CartesianTriangle:
    try:
        pts = [tuple(parse_rational(c) for c in v.split(",")) for v in values]
        if any(len(p) != 2 for p in pts):
            raise ValueError("each vertex needs two coordinates")
        return CartesianTriangle(*pts)
    except GeometryError:
        raise
    except ValueError as exc:
        raise InputError(f"bad --vertices: {exc}") from None


def cmd_figure(args) -> int:
    t = _vertices(args.vertices) if args.vertices else DEFAULT_TRIANGLE
    cfg = build_configuration(_point(args.p))
    Path(args.output).write_text(render_svg(cfg, t))
    return 0


def cmd_centers(args) -> int:
    try:
        s = SideLengths.parse(args.side_lengths)
    except GeometryError:
        raise
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad --side-lengths: {exc}") from None
    sys.stdout.write(f"{center(args.center, s)}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="halfturn", description="Exact constructions and proofs for the quadrilateral half-turn configuration.")
    parser.add_argument("--version", action="version",
                        version=f"halfturn {__version__}; theorems: {', '.join(THEOREMS)}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("config", help="print every named point for P")
    p.add_argument("--p", required=True, help="P as x:y:z (use --p=-1:2:3 for a leading minus)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_config)

    p = sub.add_parser("verify", help="exact numeric verification")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--p")
    g.add_argument("--random", type=int, metavar="N")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=50)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("prove", help="polynomial identity proofs for generic P")
    p.add_argument("--theorem", help=f"one of {', '.join(THEOREMS)}; default all")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("figure", help="write an SVG figure")
    p.add_argument("--p", required=True)
    p.add_argument("--vertices", nargs=3, metavar="X,Y")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("centers", help="barycentrics of a named center")
    p.add_argument("--side-lengths", required=True, metavar="A,B,C")
    p.add_argument("--center", required=True, help=", ".join(CENTER_NAMES))
    p.set_defaults(func=cmd_centers)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, GeometryError) as exc:
        name = type(exc).__name__
        print(f"error: {name}: {exc}" if name != "InputError" else f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
