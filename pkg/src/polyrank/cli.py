"""Command-line front end.

Every subcommand prints exactly one JSON document (CSV where noted) on
standard output and is deterministic: all randomness derives from --seed,
so identical flags produce byte-identical output.  Exit status is 0 on
success, 1 when a computation rejects its input (precondition violations,
exhausted budgets), and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Sequence

from . import __version__
from .expansion import (
    DEFAULT_BUDGET,
    SetSpec,
    degenerate_demo,
    expansion_report,
    generate_set,
)
from .incidence import build_instance, full_report
from .moment import distinct_volumes, moment_summary, volume_expansion_report
from .parsing import parse
from .poly import VarSet
from .rank import rank
from .reduction import DEFAULT_MAX_ATTEMPTS, grid_reduce, reduce
from .special import is_special

SPEC_VERSION = "1"

_GENERATOR_KINDS = ("interval", "geometric", "random_int")


def _default_budget() -> int:
    env = os.environ.get("POLYRANK_BUDGET")
    if env is not None:
        try:
            value = int(env)
        except ValueError:
            raise ValueError(f"POLYRANK_BUDGET must be an integer, got {env!r}") from None
        if value <= 0:
            raise ValueError("POLYRANK_BUDGET must be positive")
        return value
    return DEFAULT_BUDGET


def _parse_vars(text: str) -> VarSet:
    names = tuple(name.strip() for name in text.split(",") if name.strip())
    return VarSet(names)


def _parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def _parse_sets(text: str, vars: VarSet, seed: int) -> list[tuple]:
    """Either 'kind:n' (one recipe for every variable, per-variable seeds)
    or explicit '|'-separated value lists, one per variable."""
    if "|" in text or ":" not in text:
        groups = text.split("|")
        if len(groups) != vars.k:
            raise ValueError(f"need {vars.k} explicit sets separated by '|', got {len(groups)}")
        out = []
        for group in groups:
            values = tuple(_parse_rational(v) for v in group.split(",") if v.strip())
            if not values or len(set(values)) != len(values):
                raise ValueError(f"set {group!r} must list distinct values")
            out.append(tuple(sorted(values)))
        return out
    kind, _, n_text = text.partition(":")
    if kind not in _GENERATOR_KINDS:
        raise ValueError(f"unknown set kind {kind!r} (expected one of {', '.join(_GENERATOR_KINDS)})")
    n = int(n_text)
    return [generate_set(SetSpec(kind, n, seed=seed * 7919 + i)) for i in range(vars.k)]


def _emit(document: dict, stream=None) -> None:
    stream = stream or sys.stdout
    payload = {"spec_version": SPEC_VERSION}
    payload.update(document)
    stream.write(json.dumps(payload) + "\n")


def _cmd_rank(args: argparse.Namespace) -> int:
    vars = _parse_vars(args.vars)
    f = parse(args.poly, vars)
    report = rank(f, method=args.method, trials=args.trials, seed=args.seed)
    _emit(report.to_json_dict())
    return 0


def _cmd_special(args: argparse.Namespace) -> int:
    vars = _parse_vars(args.vars)
    f = parse(args.poly, vars)
    verdict = is_special(f, method=args.method, trials=args.trials, seed=args.seed)
    _emit(verdict.to_json_dict())
    return 0


def _cmd_reduce(args: argparse.Namespace) -> int:
    vars = _parse_vars(args.vars)
    f = parse(args.poly, vars)
    if args.sets:
        sets = _parse_sets(args.sets, vars, args.seed)
        result = grid_reduce(f, args.pivot, sets, seed=args.seed, max_attempts=args.max_attempts)
    else:
        result = reduce(f, args.pivot, seed=args.seed, max_attempts=args.max_attempts)
    _emit(result.to_json_dict())
    return 0


def _cmd_expand(args: argparse.Namespace) -> int:
    budget = args.budget if args.budget is not None else _default_budget()
    if args.degenerate is not None:
        n_values = [int(v) for v in args.n.split(",")] if args.n else []
        if len(n_values) != 1:
            raise ValueError("--degenerate expects exactly one value in --n")
        _emit(degenerate_demo(args.degenerate, n_values[0], seed=args.seed, budget=budget))
        return 0
    if not args.poly or not args.vars:
        raise ValueError("--poly and --vars are required unless --degenerate is given")
    vars = _parse_vars(args.vars)
    f = parse(args.poly, vars)
    n_list = [int(v) for v in args.n.split(",")]
    report = expansion_report(
        f, args.sets, n_list, seed=args.seed, budget=budget, workers=args.workers
    )
    if args.output == "csv":
        sys.stdout.write(report.to_csv_text())
    else:
        _emit(report.to_json_dict())
    return 0


def _cmd_incidence(args: argparse.Namespace) -> int:
    budget = args.budget if args.budget is not None else _default_budget()
    vars = _parse_vars(args.vars)
    f = parse(args.poly, vars)
    sets = _parse_sets(args.sets, vars, args.seed)
    inst = build_instance(f, sets, budget=budget)
    _emit(full_report(inst, eps=args.eps))
    return 0


def _cmd_moment(args: argparse.Namespace) -> int:
    if args.summary:
        _emit(moment_summary(args.d))
        return 0
    if args.points:
        params = [_parse_rational(v) for v in args.points.split(",")]
        _emit(distinct_volumes(params, args.d, signed=args.signed).to_json_dict())
        return 0
    if args.n:
        n_list = [int(v) for v in args.n.split(",")]
        _emit(volume_expansion_report(n_list, args.sets, args.d, seed=args.seed, signed=args.signed))
        return 0
    raise ValueError("moment needs one of --points, --n, or --summary")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyrank",
        description="Rank, special forms, and expansion experiments for multivariate polynomials.",
    )
    parser.add_argument("--version", action="version", version=f"polyrank {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_poly_args(p: argparse.ArgumentParser, required: bool = True) -> None:
        p.add_argument("--poly", required=required, help="polynomial expression, e.g. 'x1*x3 + x2*x3^2'")
        p.add_argument("--vars", required=required, help="comma-separated variable names fixing the ambient k")

    p_rank = sub.add_parser("rank", help="per-variable and overall rank")
    add_poly_args(p_rank)
    p_rank.add_argument("--method", choices=("exact", "randomized"), default="randomized")
    p_rank.add_argument("--trials", type=int, default=5)
    p_rank.add_argument("--seed", type=int, default=0)
    p_rank.set_defaults(func=_cmd_rank)

    p_special = sub.add_parser("special", help="rank-1 special-form verdict")
    add_poly_args(p_special)
    p_special.add_argument(
        "--method",
        choices=("exact", "randomized"),
        default="exact",
        help="identity-testing mode (randomized avoids expanding large products)",
    )
    p_special.add_argument("--trials", type=int, default=5, help="rank-engine trials")
    p_special.add_argument("--seed", type=int, default=0)
    p_special.set_defaults(func=_cmd_special)

    p_reduce = sub.add_parser("reduce", help="rank-preserving variable reduction")
    add_poly_args(p_reduce)
    p_reduce.add_argument("--pivot", required=True, help="pivot variable")
    p_reduce.add_argument("--seed", type=int, default=0)
    p_reduce.add_argument("--max-attempts", type=int, default=DEFAULT_MAX_ATTEMPTS)
    p_reduce.add_argument(
        "--sets",
        help="draw fixed values from these sets: 'kind:n' or explicit 'a,b|c,d|...'",
    )
    p_reduce.set_defaults(func=_cmd_reduce)

    p_expand = sub.add_parser("expand", help="exact image sizes and fitted growth exponent")
    add_poly_args(p_expand, required=False)
    p_expand.add_argument("--n", help="comma-separated strictly increasing set sizes")
    p_expand.add_argument("--sets", choices=_GENERATOR_KINDS, default="random_int",
                          help="set generator recipe")
    p_expand.add_argument("--seed", type=int, default=0)
    p_expand.add_argument("--budget", type=int, default=None,
                          help="max grid tuples (default POLYRANK_BUDGET or 10^8)")
    p_expand.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    p_expand.add_argument("--output", choices=("json", "csv"), default="json")
    p_expand.add_argument("--degenerate", type=int, default=None, metavar="K",
                          help="run the many-variables collapse demo with K extra variables")
    p_expand.set_defaults(func=_cmd_expand)

    p_inc = sub.add_parser("incidence", help="surface-set split and incidence counts")
    add_poly_args(p_inc)
    p_inc.add_argument("--sets", required=True, help="'kind:n' or explicit 'a,b|c,d|...'")
    p_inc.add_argument("--seed", type=int, default=0)
    p_inc.add_argument("--budget", type=int, default=None)
    p_inc.add_argument("--eps", type=float, default=0.1)
    p_inc.set_defaults(func=_cmd_incidence)

    p_moment = sub.add_parser("moment", help="moment-curve simplex volumes")
    p_moment.add_argument("--d", type=int, required=True, help="ambient dimension")
    p_moment.add_argument("--points", help="comma-separated distinct parameters")
    p_moment.add_argument("--n", help="comma-separated sizes for an expansion report")
    p_moment.add_argument("--sets", choices=_GENERATOR_KINDS, default="random_int")
    p_moment.add_argument("--seed", type=int, default=0)
    p_moment.add_argument("--signed", action="store_true", help="count both orientations")
    p_moment.add_argument("--summary", action="store_true", help="verify the symbolic identities")
    p_moment.set_defaults(func=_cmd_moment)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError, RuntimeError) as exc:
        print(f"polyrank: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
