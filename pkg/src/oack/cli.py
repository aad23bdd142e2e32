"""``oack`` command line.

Every command writes JSON to stdout with rationals as "p/q" strings.
Exit codes: 0 success, 1 check failure, 2 usage error, 3 capacity error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import checks
from .core import (
    FUNCTION,
    MEASURE,
    CapacityError,
    OackError,
    PreconditionError,
    TheoremViolation,
    from_json,
    format_rational,
)
from .expose import exposing_witness, is_frechet, is_gateaux
from .genpoly import (
    SymPoly,
    is_orthogonally_additive,
    is_orthogonally_additive_blackbox,
    is_orthosymmetric,
)
from .isometry import classify, enumerate_isometries
from .norms import norm as compute_norm
from .oapoly import OAPoly, abs_poly, check_basic, reg_norm_poly, sup_norm_bruteforce, sup_norm_poly
from .polytope import NORMS, ball_hrep, enumerate_vertices, predicted_extremes, role_for

EXIT_OK = 0
EXIT_CHECK = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _parse_vec(text: str, role: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"not valid JSON: {exc}") from None
    if not isinstance(data, list) or not data:
        raise UsageError("expected a nonempty JSON array of rationals")
    try:
        return from_json(data, role)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def cmd_norm(args) -> int:
    v = _parse_vec(args.vec, role_for(args.norm))
    _emit(format_rational(compute_norm(v, args.norm)))
    return EXIT_OK


def cmd_poly(args) -> int:
    P = OAPoly(args.degree, _parse_vec(args.mu, MEASURE))
    value = sup_norm_poly(P) if args.which == "sup" else reg_norm_poly(P)
    if not args.oracle:
        _emit(format_rational(value))
        return EXIT_OK
    # regular norm = sup norm of |P|, whose measure is |mu|
    oracle = sup_norm_bruteforce(P if args.which == "sup" else abs_poly(P))
    _emit({"value": format_rational(value), "oracle": format_rational(oracle), "agree": value == oracle})
    return EXIT_OK if value == oracle else EXIT_CHECK


def cmd_basic(args) -> int:
    P = OAPoly(args.degree, _parse_vec(args.mu, MEASURE))
    x = _parse_vec(args.x, FUNCTION)
    _emit(check_basic(P, x).to_json())
    return EXIT_OK


def cmd_vertices(args) -> int:
    vrep = enumerate_vertices(ball_hrep(args.norm, args.k))
    _emit(vrep.to_json())
    status = EXIT_OK
    if args.check:
        predicted = predicted_extremes(args.norm, args.k)
        if predicted.as_set() != vrep.as_set():
            print(f"mismatch with predicted extreme set ({len(predicted)} predicted)", file=sys.stderr)
            status = EXIT_CHECK
    if args.figure:
        if args.k != 2:
            raise UsageError("--figure needs k = 2")
        from .figures import save_ball

        save_ball(args.norm, args.figure, vrep)
    return status


def cmd_isometries(args) -> int:
    maps = enumerate_isometries(args.norm, args.k)
    if args.classify:
        if args.norm != "d":
            raise UsageError("--classify applies to the d-norm only")
        _emit([classify(T).to_json() for T in maps])
    else:
        _emit([{"matrix": T.to_json()} for T in maps])
    return EXIT_OK


def cmd_smooth(args) -> int:
    x = _parse_vec(args.vec, FUNCTION)
    gateaux, derivative = is_gateaux(x)
    frechet, _ = is_frechet(x)
    _emit(
        {
            "gateaux": gateaux,
            "frechet": frechet,
            "derivative": derivative.to_json() if derivative is not None else None,
        }
    )
    return EXIT_OK


def cmd_expose(args) -> int:
    mu = _parse_vec(args.target, MEASURE)
    _emit(exposing_witness(mu).to_json())
    return EXIT_OK


def cmd_sympoly(args) -> int:
    try:
        P = SymPoly.from_json(json.loads(args.poly))
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"bad SymPoly JSON: {exc}") from None
    _emit(
        {
            "orthogonally_additive": is_orthogonally_additive(P),
            "orthosymmetric": is_orthosymmetric(P),
            "blackbox": is_orthogonally_additive_blackbox(P),
        }
    )
    return EXIT_OK


def cmd_check(args) -> int:
    if args.suite != "all" and args.suite not in checks.SUITES:
        raise UsageError(f"unknown suite {args.suite!r}")
    scale = checks.Scale(args.k_max, args.n_max, args.trials)
    reports = checks.run_checks(args.suite, args.seed, scale)
    failures = sum(len(r.failures) for r in reports)
    _emit({"suites": [r.to_json() for r in reports], "failures": failures})
    for r in reports:
        print(f"{r.suite}: {r.cases} cases, {len(r.failures)} failures, {r.wall_time:.2f}s", file=sys.stderr)
    if args.figures:
        from .figures import save_check_summary, save_two_point_figures

        save_two_point_figures(args.figures)
        save_check_summary(reports, Path(args.figures) / "check_summary.png")
    return EXIT_OK if failures == 0 else EXIT_CHECK


def cmd_figures(args) -> int:
    from .figures import save_two_point_figures

    _emit([str(p) for p in save_two_point_figures(args.out)])
    return EXIT_OK


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="oack", description="Exact computations for orthogonally additive polynomials on C(K), K finite.")
    parser.add_argument("--json", action="store_true", help="JSON output (always on)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("norm", help="norm of a vector")
    p.add_argument("--norm", choices=NORMS, required=True)
    p.add_argument("--vec", required=True, help='JSON array, e.g. \'["3","-1"]\'')
    p.set_defaults(func=cmd_norm)

    p = sub.add_parser("poly-norm", help="sup or regular norm of an orthogonally additive polynomial")
    p.add_argument("--mu", required=True)
    p.add_argument("--degree", type=_positive, required=True)
    p.add_argument("--which", choices=("sup", "reg"), default="sup")
    p.add_argument("--oracle", action="store_true", help="cross-check by sign-pattern scan")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("basic", help="|P|(x) against the local supremum")
    p.add_argument("--mu", required=True)
    p.add_argument("--degree", type=_positive, required=True)
    p.add_argument("--x", required=True)
    p.set_defaults(func=cmd_basic)

    p = sub.add_parser("vertices", help="vertices of a unit ball")
    p.add_argument("--norm", choices=NORMS, required=True)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--check", action="store_true")
    p.add_argument("--figure", help="write a PNG of the ball (k = 2)")
    p.set_defaults(func=cmd_vertices)

    p = sub.add_parser("isometries", help="linear isometries of a unit ball")
    p.add_argument("--norm", choices=NORMS, default="d")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--classify", action="store_true")
    p.set_defaults(func=cmd_isometries)

    p = sub.add_parser("smooth", help="Gateaux/Frechet smoothness of the d-norm at a unit vector")
    p.add_argument("--vec", required=True)
    p.set_defaults(func=cmd_smooth)

    p = sub.add_parser("expose", help="witness vector strongly exposing an extreme point of B_0")
    p.add_argument("--target", required=True)
    p.set_defaults(func=cmd_expose)

    p = sub.add_parser("sympoly", help="orthogonal additivity tests for a SymPoly JSON document")
    p.add_argument("--poly", required=True)
    p.set_defaults(func=cmd_sympoly)

    p = sub.add_parser("check", help="run the property suites")
    p.add_argument("--suite", default="all", help=f"one of {', '.join(checks.SUITES)} or all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--k-max", type=_positive)
    p.add_argument("--n-max", type=_positive)
    p.add_argument("--trials", type=_positive)
    p.add_argument("--figures", help="directory for PNG figures")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("figures", help="render the two-point unit balls")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_figures)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"oack: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"oack: capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except TheoremViolation as exc:
        print(f"oack: check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK
    except (PreconditionError, OackError, ValueError, IndexError) as exc:
        print(f"oack: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
