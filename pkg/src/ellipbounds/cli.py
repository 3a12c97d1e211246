"""Command-line surface: evaluation, enclosure, verification suites,
comparison tables, and crossover search.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
3 internal numerical error, 4 I/O error.  All commands are deterministic;
identical invocations produce identical bytes on stdout and in files.
"""

from __future__ import annotations

import argparse
import csv
import math
import os
import sys
from dataclasses import dataclass
from enum import Enum

from .bounds import BoundSpec, best_enclosure, default_candidates, parse_bound_spec
from .core import complete_e, complete_k, ellipse_perimeter, toader_mean
from .errors import (
    ConfigurationError,
    DivergenceError,
    DomainError,
    EllipBoundsError,
    InvalidBoundError,
    VerificationError,
)
from .verify import SUITE_NAMES, CrossoverResult, find_crossover, run_suite

__all__ = ["main", "entry", "GridSpec", "Spacing"]

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3
EXIT_IO = 4

_DEFAULT_GRID = 10_000
_GRID_ENV = "ELLIP_GRID_POINTS"


class Spacing(Enum):
    UNIFORM = "uniform"
    LOG_NEAR_ONE = "log-near-one"


@dataclass(frozen=True)
class GridSpec:
    """Evaluation grid on [start, end]; log-near-one places the points
    geometrically in 1 - r between 1 - start and 1 - end."""

    start: float
    end: float
    points: int
    spacing: Spacing = Spacing.UNIFORM

    def __post_init__(self) -> None:
        if not (0.0 <= self.start < self.end <= 1.0):
            raise DomainError(f"need 0 <= start < end <= 1, got [{self.start!r}, {self.end!r}]")
        if self.points < 2:
            raise DomainError(f"grid needs at least 2 points, got {self.points!r}")
        if self.spacing is Spacing.LOG_NEAR_ONE and self.end >= 1.0:
            raise DomainError("log-near-one spacing needs end < 1")

    def values(self) -> list[float]:
        n = self.points
        if self.spacing is Spacing.UNIFORM:
            step = (self.end - self.start) / (n - 1)
            return [self.start + i * step for i in range(n)]
        g0, g1 = 1.0 - self.start, 1.0 - self.end
        ratio = math.log(g1 / g0) / (n - 1)
        return [1.0 - g0 * math.exp(i * ratio) for i in range(n)]


def _err(msg: str) -> None:
    print(f"error: {msg}", file=sys.stderr)


def _grid_points_from_env() -> int:
    raw = os.environ.get(_GRID_ENV)
    if raw is None:
        return _DEFAULT_GRID
    try:
        n = int(raw)
    except ValueError:
        raise ConfigurationError(f"{_GRID_ENV} must be a positive integer, got {raw!r}") from None
    if n <= 0:
        raise ConfigurationError(f"{_GRID_ENV} must be a positive integer, got {raw!r}")
    return n


def _parse_families(items: list[str]) -> list[BoundSpec]:
    specs: list[BoundSpec] = []
    for item in items:
        if item.strip().lower() == "all":
            specs.extend(default_candidates())
        else:
            specs.append(parse_bound_spec(item))
    return specs


# --------------------------------------------------------------------------
# Subcommands.

def _cmd_eval(args: argparse.Namespace) -> int:
    if args.what == "toader":
        if args.a is None or args.b is None:
            _err("--what toader needs --a and --b")
            return EXIT_USAGE
        value = toader_mean(args.a, args.b)
    else:
        if args.r is None:
            _err(f"--what {args.what} needs --r")
            return EXIT_USAGE
        if args.what == "K":
            value = complete_k(args.r)
        elif args.what == "E":
            value = complete_e(args.r)
        else:
            value = ellipse_perimeter(args.r)
    print(f"{value:.15f}")
    return EXIT_OK


def _cmd_enclose(args: argparse.Namespace) -> int:
    specs = _parse_families(args.families)
    enc = best_enclosure(args.r, specs)
    e_ref = complete_e(args.r)
    width = enc.hi - enc.lo
    position = (e_ref - enc.lo) / width if width > 0.0 else math.nan
    print(f"r         {args.r:.17g}")
    print(f"lo        {enc.lo:.17g}  source={enc.lo_source.label}")
    print(f"hi        {enc.hi:.17g}  source={enc.hi_source.label}")
    print(f"e_ref     {e_ref:.17g}")
    print(f"width     {width:.17g}")
    print(f"position  {position:.17g}")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    grid = _grid_points_from_env()
    try:
        results = run_suite(args.suite, grid_points=grid)
    except VerificationError as exc:
        print(f"FAIL  {exc}")
        return EXIT_VERIFY_FAIL
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        print(f"{status}  {res.name:<48s}  {res.detail}")
    n_pass = sum(res.passed for res in results)
    print(f"{n_pass}/{len(results)} checks passed (suite={args.suite}, grid={grid})")
    return EXIT_OK if n_pass == len(results) else EXIT_VERIFY_FAIL


def _cmd_compare(args: argparse.Namespace) -> int:
    grid = GridSpec(start=args.start, end=args.end, points=args.points,
                    spacing=Spacing(args.spacing))
    specs = _parse_families(args.families)
    header = ["r", "e_ref"] + [s.label for s in specs] + ["best_lo", "best_hi"]
    rows = []
    for r in grid.values():
        enc = best_enclosure(r, specs)
        row = [r, complete_e(r)] + [s.evaluate(r) for s in specs] + [enc.lo, enc.hi]
        rows.append([f"{v:.17g}" for v in row])
    try:
        with open(args.output, "w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(rows)
    except OSError as exc:
        _err(f"cannot write {args.output!r}: {exc}")
        return EXIT_IO
    print(f"wrote {len(rows)} rows to {args.output}")
    return EXIT_OK


def _cmd_crossover(args: argparse.Namespace) -> int:
    spec_a = parse_bound_spec(args.a)
    spec_b = parse_bound_spec(args.b)
    result = find_crossover(spec_a, spec_b)
    if isinstance(result, CrossoverResult):
        print(f"crossover: r*={result.r_cross:.12f}  delta={result.delta:.12f}  "
              f"better near r=1: {result.better_near_one.label}")
    else:
        print(f"NO-CROSSOVER: {result.dominant.label} dominates on (0, 1)")
    return EXIT_OK


# --------------------------------------------------------------------------
# Parser assembly and dispatch.

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ellipbounds",
        description="Certified enclosures and sharp bounds for the complete "
                    "elliptic integral of the second kind.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a reference quantity")
    p_eval.add_argument("--what", required=True, choices=["K", "E", "perimeter", "toader"])
    p_eval.add_argument("--r", type=float)
    p_eval.add_argument("--a", type=float)
    p_eval.add_argument("--b", type=float)
    p_eval.set_defaults(handler=_cmd_eval)

    p_enc = sub.add_parser("enclose", help="best enclosure of E(r) from bound families")
    p_enc.add_argument("--r", type=float, required=True)
    p_enc.add_argument("--families", nargs="+", required=True,
                       metavar="SPEC", help="family specs, or 'all'")
    p_enc.set_defaults(handler=_cmd_enclose)

    p_ver = sub.add_parser("verify", help="run a verification suite")
    p_ver.add_argument("--suite", required=True, choices=list(SUITE_NAMES))
    p_ver.set_defaults(handler=_cmd_verify)

    p_cmp = sub.add_parser("compare", help="write a CSV comparison table")
    p_cmp.add_argument("--start", type=float, required=True)
    p_cmp.add_argument("--end", type=float, required=True)
    p_cmp.add_argument("--points", type=int, required=True)
    p_cmp.add_argument("--spacing", choices=[s.value for s in Spacing], default="uniform")
    p_cmp.add_argument("--families", nargs="+", required=True, metavar="SPEC")
    p_cmp.add_argument("--output", required=True)
    p_cmp.set_defaults(handler=_cmd_compare)

    p_x = sub.add_parser("crossover", help="largest radius where two bounds trade places")
    p_x.add_argument("--a", required=True, metavar="SPEC")
    p_x.add_argument("--b", required=True, metavar="SPEC")
    p_x.set_defaults(handler=_cmd_crossover)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.handler(args)
    except DivergenceError as exc:
        _err(f"diverges: {exc}")
        return EXIT_USAGE
    except (DomainError, InvalidBoundError, ConfigurationError) as exc:
        _err(str(exc))
        return EXIT_USAGE
    except VerificationError as exc:
        _err(f"verification failure: {exc}")
        return EXIT_VERIFY_FAIL
    except OSError as exc:
        _err(f"I/O failure: {exc}")
        return EXIT_IO
    except (EllipBoundsError, ArithmeticError) as exc:
        _err(f"internal numerical error: {exc}")
        return EXIT_INTERNAL


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
