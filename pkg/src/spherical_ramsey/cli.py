"""Command-line driver.

Exit codes: 0 when everything verified, 1 when anything was refuted or
undecided, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .bounds import DistanceCase, blue_bound
from .certfile import CertificateFile, ColorResult, Failure
from .coloring import PRESETS, ColoringParams, RationalVector, color_point
from .exact import RationalInterval, fmt_q, to_fraction
from .ffield import ResidueSet, squares
from .search import SearchSpace, search_unit_params
from .simulate import CampaignConfig, InadmissibleAlpha, empirical_campaign
from .verifier import (
    Certificate,
    check_blue_translates,
    check_range,
    check_red_l3,
    divisibility_certificate,
    k_window,
    range_certificate,
)
from .witness import NotCovered, Undecided, red_side_certificate, witness, witness_violations

ENV_THREADS = "SPHRAMSEY_THREADS"
ENV_OUTPUT = "SPHRAMSEY_OUTPUT"

EXIT_OK, EXIT_REFUTED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _params_from_args(args) -> ColoringParams:
    if args.params:
        if args.params not in PRESETS:
            raise UsageError(f"unknown preset {args.params!r}; choose from {sorted(PRESETS)}")
        return PRESETS[args.params]
    if args.prime is None:
        return PRESETS["canonical29"]
    if args.red_set is not None:
        members = [int(x) for x in args.red_set.split(",") if x.strip()]
        return ColoringParams.from_red_set(args.prime, members)
    if args.d is None or args.l is None:
        raise UsageError("give --d and --l, or --red-set")
    return ColoringParams.progression(args.prime, args.d, args.l)


def _add_params(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("coloring")
    g.add_argument("--params", help="named preset: canonical29 or canonical47")
    g.add_argument("--prime", type=int, help="prime modulus p (default preset canonical29)")
    g.add_argument("--d", type=int, help="red step d")
    g.add_argument("--l", type=int, help="number of red residues l")
    g.add_argument("--red-set", help="explicit comma-separated red residues, instead of --d/--l")


def _threads(args) -> int:
    if args.threads is not None:
        return args.threads
    return int(os.environ.get(ENV_THREADS, "1"))


def _parse_dims(text: str) -> tuple[int, ...]:
    if "-" in text:
        lo, hi = (int(x) for x in text.split("-"))
        return tuple(range(lo, hi + 1))
    return tuple(int(x) for x in text.split(","))


def _parse_point(line: str) -> RationalVector:
    try:
        raw = json.loads(line)
    except json.JSONDecodeError:
        raw = line.strip()
    if isinstance(raw, str):
        raw = raw.split(",")
    if not isinstance(raw, list) or not raw:
        raise UsageError(f"point must be a JSON list or a comma-separated string: {line.strip()}")
    coords = []
    for c in raw:
        if isinstance(c, float) or isinstance(c, bool):
            raise UsageError("coordinates must be exact: use 'num/den' strings or integers")
        coords.append(to_fraction(c))
    return RationalVector(tuple(coords))


def cmd_verify(args) -> tuple[dict, list, int]:
    params = _params_from_args(args)
    alpha_sq = to_fraction(args.alpha_sq)
    case = DistanceCase(args.case)
    window = k_window(alpha_sq, params.p)
    wanted = set(args.lemma or ["all"])
    run = lambda name: "all" in wanted or name in wanted  # noqa: E731
    results: list = []
    if run("range"):
        results.append(range_certificate(params, window))
    if run("divisibility") and params.d is not None and params.d >= 2:
        results.append(divisibility_certificate(params, window))
    if run("red"):
        if check_range(params, window):
            results.append(check_red_l3(params, window))
        else:
            results.append(Failure("range condition violated", "red_l3 not certified"))
    if run("blue"):
        sq = squares(params.p)
        results.append(check_blue_translates(params, sq, "squares"))
        if case is DistanceCase.GENERAL:
            other = ResidueSet.of(params.p, [0]).union(sq.complement())
            results.append(check_blue_translates(params, other, "non-squares with 0"))
    inputs = {"params": params.to_dict(), "alpha_sq": fmt_q(alpha_sq), "case": case.value, "lemma": sorted(wanted)}
    return inputs, results, _code(results)


def cmd_bound(args) -> tuple[dict, list, int]:
    report = blue_bound(args.prime, args.case)
    return {"prime": args.prime, "case": args.case}, [report], EXIT_OK


def cmd_search(args) -> tuple[dict, list, int]:
    space = SearchSpace(args.p_min, args.p_max, args.d_min, args.d_max, args.l_min, args.l_max,
                        to_fraction(args.alpha_sq), args.p_cap)
    entries = search_unit_params(space, threads=_threads(args))
    return space.to_dict(), entries, EXIT_OK


def cmd_witness(args) -> tuple[dict, list, int]:
    if (args.alpha_sq is None) == (args.alpha_sq_interval is None):
        raise UsageError("give exactly one of --alpha-sq or --alpha-sq-interval")
    if args.alpha_sq is not None:
        target = to_fraction(args.alpha_sq)
        inputs = {"alpha_sq": fmt_q(target)}
    else:
        target = RationalInterval.parse(args.alpha_sq_interval)
        inputs = {"alpha_sq_interval": target.to_strings()}
    inputs["max_search"] = args.max_search
    try:
        w = witness(target, args.max_search)
    except (NotCovered, Undecided) as exc:
        return inputs, [Failure(type(exc).__name__, str(exc))], EXIT_REFUTED
    problems = witness_violations(w)
    results: list = [w, red_side_certificate(w)]
    if problems:
        results.append(Failure("invariant violated", "; ".join(problems)))
    return inputs, results, _code(results)


def cmd_color(args) -> tuple[dict, list, int]:
    params = _params_from_args(args)
    results = []
    lines: list[str] = []
    try:
        with open(args.points) as fh:
            lines = [ln for ln in fh if ln.strip()]
    except OSError as exc:
        raise UsageError(f"cannot read {args.points}: {exc}") from exc
    points = []
    for ln in lines:
        try:
            points.append(_parse_point(ln))
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"ill-formed point {ln.strip()!r}: {exc}") from exc
    for x in points:
        c = color_point(x, params)
        print(c.value)
        results.append(ColorResult(tuple(x.to_strings()), fmt_q(x.norm_sq()), c.value))
    return {"params": params.to_dict(), "points": args.points}, results, EXIT_OK


def cmd_simulate(args) -> tuple[dict, list, int]:
    params = _params_from_args(args)
    config = CampaignConfig(_parse_dims(args.dims), to_fraction(args.alpha_sq), args.length, args.trials, args.seed)
    try:
        report = empirical_campaign(config, params, threads=_threads(args))
    except InadmissibleAlpha as exc:
        return {"config": config.to_dict(), "params": params.to_dict()}, [Failure("inadmissible", str(exc))], EXIT_REFUTED
    code = EXIT_OK if report.red_l3_total == 0 else EXIT_REFUTED
    return {"config": config.to_dict(), "params": params.to_dict()}, [report], code


def _code(results: Sequence) -> int:
    for r in results:
        if isinstance(r, Failure) or (isinstance(r, Certificate) and not r.verified):
            return EXIT_REFUTED
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spherical-ramsey", description=__doc__.splitlines()[0])
    parser.add_argument("--output", help=f"write the certificate file here (env {ENV_OUTPUT})")
    parser.add_argument("--threads", type=int, help=f"worker processes (env {ENV_THREADS}, default 1)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the finite lemma checks")
    _add_params(p)
    p.add_argument("--alpha-sq", default="1", help="squared red step, exact rational (default 1)")
    p.add_argument("--case", choices=[c.value for c in DistanceCase], default="unit",
                   help="general also checks translates of the non-squares with 0")
    p.add_argument("--lemma", action="append", choices=["all", "range", "divisibility", "red", "blue"])
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bound", help="blue progression bound for a prime")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--case", choices=[c.value for c in DistanceCase], default="unit")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("search", help="sweep (p, d, l) for admissible colorings")
    p.add_argument("--p-min", type=int, default=3)
    p.add_argument("--p-max", type=int, default=97)
    p.add_argument("--d-min", type=int, default=4)
    p.add_argument("--d-max", type=int, default=10)
    p.add_argument("--l-min", type=int, default=2)
    p.add_argument("--l-max", type=int, default=10)
    p.add_argument("--alpha-sq", default="1")
    p.add_argument("--p-cap", type=int, default=200)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("witness", help="scaled red/blue distances for a ratio alpha")
    p.add_argument("--alpha-sq", help="exact rational alpha^2, e.g. 1/2")
    p.add_argument("--alpha-sq-interval", help="'lo,hi' enclosing an irrational alpha^2")
    p.add_argument("--max-search", type=int, default=100_000)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("color", help="color points from a JSON-lines file")
    _add_params(p)
    p.add_argument("--points", required=True, help="one point per line: JSON list of 'num/den' strings")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("simulate", help="color random exact progressions")
    _add_params(p)
    p.add_argument("--dims", default="2-8", help="'lo-hi' or comma list")
    p.add_argument("--alpha-sq", default="1")
    p.add_argument("--length", type=int, default=1500)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    started = time.perf_counter()
    try:
        inputs, results, code = args.func(args)
    except (UsageError, ValueError, TypeError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    elapsed = int((time.perf_counter() - started) * 1000)
    cert = CertificateFile(args.command, inputs, tuple(results), elapsed)
    output = args.output or os.environ.get(ENV_OUTPUT)
    if output:
        try:
            with open(output, "w") as fh:
                fh.write(cert.dumps() + "\n")
        except OSError as exc:
            print(f"error: cannot write {output}: {exc}", file=sys.stderr)
            return EXIT_USAGE
    elif args.command != "color":
        print(cert.dumps())
    return code


if __name__ == "__main__":
    raise SystemExit(main())
