"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 usage or domain error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

import numpy as np

from . import coords, hydrogen
from .multiplet import (
    HalfInt,
    multiplet,
    multiplet_to_csv,
    multiplet_to_json,
    multiplet_to_latex,
)
from .suites import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _round(x):
    """Floats to 12 significant digits, recursively."""
    if isinstance(x, float):
        return float(f"{x:.12g}")
    if isinstance(x, complex):
        return {"re": _round(x.real), "im": _round(x.imag)}
    if isinstance(x, (np.floating,)):
        return _round(float(x))
    if isinstance(x, (np.complexfloating,)):
        return _round(complex(x))
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.bool_,)):
        return bool(x)
    if isinstance(x, dict):
        return {k: _round(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_round(v) for v in x]
    return x


def _emit(doc, out) -> None:
    out.write(json.dumps(_round(doc), indent=2, sort_keys=True))
    out.write("\n")


def _floats(text: str, n: int, what: str) -> list[float]:
    try:
        vals = [float(v) for v in text.split(",")]
    except ValueError:
        raise UsageError(f"{what} must be {n} comma-separated numbers") from None
    if len(vals) != n:
        raise UsageError(f"{what} must be {n} comma-separated numbers")
    return vals


def _halfint(text: str) -> HalfInt:
    try:
        return HalfInt.parse(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


# subcommands --------------------------------------------------------------------

def cmd_multiplet(args, out) -> int:
    if args.j.twice < 0:
        raise UsageError("j must be >= 0")
    mult = multiplet(args.j, args.direction)
    if args.format == "json":
        out.write(multiplet_to_json(mult, normalized=args.normalized) + "\n")
    elif args.format == "csv":
        out.write(multiplet_to_csv(mult))
    else:
        out.write(multiplet_to_latex(mult))
    return EXIT_OK


def cmd_verify(args, out) -> int:
    opts = {"seed": args.seed}
    if args.max_j is not None:
        opts["max_j"] = args.max_j
    if args.samples is not None:
        opts["samples"] = args.samples
    records = run_suite(args.suite, **opts)
    passed = all(r["passed"] for r in records)
    _emit({"suite": args.suite, "passed": passed, "checks": records}, out)
    return EXIT_OK if passed else EXIT_FAIL


def cmd_eval(args, out) -> int:
    r, theta, phi, psi = _floats(args.point, 4, "--point")
    if r <= 0:
        raise UsageError("r must be positive")
    if args.j.twice < 0 or abs(args.m.twice) > args.j.twice or (args.j.twice - args.m.twice) % 2:
        raise UsageError(f"m={args.m} is not in the j={args.j} multiplet")
    ket = multiplet(args.j).ket(args.m)
    z1, z2 = coords.euler_to_c2(r, theta, phi, psi)
    value = ket.evaluate(z1, z2, normalized=not args.raw)
    _emit(
        {
            "j": str(args.j),
            "m": str(args.m),
            "point": {"r": r, "theta": theta, "phi": phi, "psi": psi},
            "normalized": not args.raw,
            "norm_factor": str(ket.norm_factor),
            "value": complex(value),
        },
        out,
    )
    return EXIT_OK


def cmd_hydrogen(args, out) -> int:
    units = hydrogen.PhysicalUnits(args.hbar, args.mu, args.q)
    if args.all_m or args.m is None:
        sts = hydrogen.states(args.j, units)
    else:
        sts = [hydrogen.make_state(args.j, args.m, units)]
    reports = [
        hydrogen.hamiltonian_residual(s, args.samples, args.seed, args.fd_step).to_dict()
        for s in sts
    ]
    passed = all(r["max_rel_residual"] < args.tol for r in reports)
    _emit({"passed": passed, "tolerance": args.tol, "reports": reports}, out)
    return EXIT_OK if passed else EXIT_FAIL


def cmd_hopf(args, out) -> int:
    if (args.u is None) == (args.z is None):
        raise UsageError("give exactly one of --u or --z")
    if args.u is not None:
        u = _floats(args.u, 4, "--u")
    else:
        u = _floats(args.z, 4, "--z")
    x = coords.hopf_r4(u)
    z1, z2 = coords.r4_to_c2(u)
    doc = {"u": u, "x": [float(v) for v in x], "z1": complex(z1), "z2": complex(z2)}
    if abs(z1) ** 2 + abs(z2) ** 2 > 0:
        p, pole = coords.c2_to_euler(z1, z2, pole_tol=1e-12)
        doc["euler"] = {"r": p.r, "theta": p.theta, "phi": p.phi, "psi": p.psi}
        doc["pole"] = pole
    else:
        doc["euler"] = None
        doc["pole"] = True
    _emit(doc, out)
    return EXIT_OK


def cmd_sweep(args, out) -> int:
    tags = coords.EULER_TAGS if args.tag == "all" else [args.tag]
    try:
        entries = coords.consistency_sweep(args.max_j, args.samples, args.seed, tags, h=args.fd_step)
    except ValueError as exc:
        raise UsageError(str(exc))
    records = [e.to_dict() for e in entries]
    passed = all(r["max_rel_err"] < args.tol for r in records)
    _emit({"passed": passed, "tolerance": args.tol, "entries": records}, out)
    return EXIT_OK if passed else EXIT_FAIL


# parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="spinharm", description="Exact angular-momentum harmonics on C^2.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    m = sub.add_parser("multiplet", help="generate the |j,m> multiplet")
    m.add_argument("--j", type=_halfint, required=True, help='e.g. 2, "3/2" or 1.5')
    m.add_argument("--format", choices=("json", "csv", "latex"), default="json")
    m.add_argument("--normalized", action="store_true", help="include the exact normalizing scale")
    m.add_argument("--direction", choices=("from_top", "from_bottom"), default="from_top")
    m.set_defaults(func=cmd_multiplet)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=SUITES + ("all",), required=True)
    v.add_argument("--max-j", type=_halfint, default=None)
    v.add_argument("--samples", type=int, default=None)
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("eval", help="evaluate a ket at an Euler point")
    e.add_argument("--j", type=_halfint, required=True)
    e.add_argument("--m", type=_halfint, required=True)
    e.add_argument("--point", required=True, help="r,theta,phi,psi")
    e.add_argument("--raw", action="store_true", help="evaluate the unnormalized body")
    e.set_defaults(func=cmd_eval)

    h = sub.add_parser("hydrogen", help="Hamiltonian residual of hydrogen states")
    h.add_argument("--j", type=_halfint, required=True)
    grp = h.add_mutually_exclusive_group()
    grp.add_argument("--m", type=_halfint)
    grp.add_argument("--all-m", action="store_true")
    h.add_argument("--samples", type=int, default=100)
    h.add_argument("--seed", type=int, default=0)
    h.add_argument("--fd-step", type=float, default=coords.DEFAULT_STEP)
    h.add_argument("--tol", type=float, default=1e-5)
    h.add_argument("--hbar", type=float, default=1.0)
    h.add_argument("--mu", type=float, default=1.0)
    h.add_argument("--q", type=float, default=1.0)
    h.set_defaults(func=cmd_hydrogen)

    o = sub.add_parser("hopf", help="map a point of R^4 / C^2 to R^3 and Euler coordinates")
    o.add_argument("--u", help="u1,u2,u3,u4")
    o.add_argument("--z", help="re1,im1,re2,im2")
    o.set_defaults(func=cmd_hopf)

    s = sub.add_parser("sweep", help="Euler-form operators against the exact action")
    s.add_argument("--tag", default="all", help="operator tag, e.g. Lplus, Casimir, dz1, or all")
    s.add_argument("--max-j", type=_halfint, default=HalfInt.parse(3))
    s.add_argument("--samples", type=int, default=200)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--fd-step", type=float, default=coords.DEFAULT_STEP)
    s.add_argument("--tol", type=float, default=1e-6)
    s.set_defaults(func=cmd_sweep)
    return p


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        return args.func(args, out)
    except (UsageError, ValueError, coords.DomainError) as exc:
        sys.stderr.write(f"spinharm: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
