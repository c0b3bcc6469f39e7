"""Command-line front end: estimate, batch, render and validate subcommands.

Every subcommand echoes its seed, and identical flags (seed included)
produce byte-identical machine-readable outputs.  Exit codes: 0 success,
1 usage error, 2 runtime or validation failure.
"""

from __future__ import annotations

import argparse
import json
import os
import secrets
import sys
from pathlib import Path

from .errors import DegenerateSampleError
from .estimators import (
    estimate_pi_needle,
    estimate_pi_triangle,
    run_batch,
    run_needle_trials,
    run_triangle_trials,
    summarize,
)
from .geometry import GridSpec, TriangleSpec, crossings_per_cast
from .oracle import expected_crossings_closed_form, expected_crossings_quadrature
from .render import HistogramScene, filename_for_cast, render_cast, render_histogram, scene_for_cast
from .sampling import RngConfig, sample_cast

_USAGE_EXIT = 1
_FAILURE_EXIT = 2


class _Parser(argparse.ArgumentParser):
    """argparse exits with code 2 on bad flags; remap usage errors to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(_USAGE_EXIT, f"{self.prog}: error: {message}\n")


def _resolve_seed(value: int | None) -> int:
    if value is None:
        value = secrets.randbits(64)
        print(f"seed = {value} (generated)")
    else:
        print(f"seed = {value}")
    return value


def _write_text(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def cmd_estimate(args) -> int:
    if args.method == "triangle" and args.ratio is not None:
        raise ValueError("--ratio only applies to --method needle")
    if args.trials < 1:
        raise ValueError(f"--trials must be >= 1, got {args.trials}")
    seed = _resolve_seed(args.seed)
    rng = RngConfig(seed, 0).stream()
    if args.method == "triangle":
        agg = run_triangle_trials(args.trials, rng)
        summary = estimate_pi_triangle(agg)
        print(f"count_x = {agg.count_x_total}\tcount_x/trials = {agg.count_x_total / agg.trials:.6f}")
        print(f"count_y = {agg.count_y_total}\tcount_y/trials = {agg.count_y_total / agg.trials:.6f}")
        report = {
            "method": "triangle",
            "trials": agg.trials,
            "seed": seed,
            "count_x": agg.count_x_total,
            "count_y": agg.count_y_total,
            "pi_estimate": summary.pi_estimate,
            "standard_error": summary.standard_error,
        }
    else:
        ratio = 1.0 if args.ratio is None else args.ratio
        agg = run_needle_trials(args.trials, rng, ratio)
        summary = estimate_pi_needle(agg)
        print(f"hits = {agg.hits}\thits/trials = {agg.hits / agg.trials:.6f}")
        report = {
            "method": "needle",
            "trials": agg.trials,
            "seed": seed,
            "hits": agg.hits,
            "ratio": ratio,
            "pi_estimate": summary.pi_estimate,
            "standard_error": summary.standard_error,
        }
    print(f"pi estimate = {summary.pi_estimate:.6f}")
    if summary.standard_error is not None:
        print(f"standard error = {summary.standard_error:.6f}")
    if args.json:
        _write_text(args.json, json.dumps(report, indent=2, sort_keys=True) + "\n")
    return 0


def cmd_batch(args) -> int:
    if args.method == "triangle" and args.ratio is not None:
        raise ValueError("--ratio only applies to --method needle")
    if args.runs < 1 or args.trials < 1:
        raise ValueError("--runs and --trials must be >= 1")
    seed = _resolve_seed(args.seed)
    ratio = 1.0 if args.ratio is None else args.ratio
    result = run_batch(
        args.runs,
        args.trials,
        RngConfig(seed, 0),
        args.method,
        ratio=ratio,
        bins=args.bins,
        workers=args.workers,
    )
    stats = summarize(result.estimates)
    print(f"runs = {result.runs}  trials/run = {result.trials_per_run}")
    print(
        f"mean = {stats.mean:.6f}  stddev = {stats.stddev:.6f}  "
        f"95% CI = [{stats.ci_low:.6f}, {stats.ci_high:.6f}]"
    )
    if args.csv:
        rows = [f"{k},{est!r}" for k, est in enumerate(result.estimates)]
        _write_text(args.csv, "run,pi_estimate\n" + "\n".join(rows) + "\n")
    if args.svg:
        scene = HistogramScene(bins=result.histogram, mean=result.mean)
        _write_text(args.svg, render_histogram(scene))
    return 0


def cmd_render(args) -> int:
    if args.images < 0:
        raise ValueError(f"--images cannot be negative, got {args.images}")
    seed = _resolve_seed(args.seed)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    rng = RngConfig(seed, 0).stream()
    for i in range(args.images):
        cast = sample_cast(rng, 1.0)
        tri = TriangleSpec((0.0, 0.0), 1.0, cast.rotation)
        grid = GridSpec(1.0, cast.offset_x, cast.offset_y)
        tally = crossings_per_cast(tri.vertices(), grid)
        name = filename_for_cast(i)
        (out_dir / name).write_text(render_cast(scene_for_cast(tri, grid)), encoding="utf-8")
        print(f"{name}: count_x = {tally.count_x}  count_y = {tally.count_y}")
    return 0


def _parse_resolution(text: str) -> tuple[int, int]:
    parts = [p for p in text.replace(",", "x").split("x") if p]
    try:
        numbers = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"bad --resolution {text!r}; use THETA, THETAxOFFSET or THETAxOFFSETxOFFSET")
    if len(numbers) == 1:
        return numbers[0], numbers[0]
    if len(numbers) == 2:
        return numbers[0], numbers[1]
    if len(numbers) == 3:
        if numbers[1] != numbers[2]:
            raise ValueError("the two offset lattice sizes must be equal")
        return numbers[0], numbers[1]
    raise ValueError(f"bad --resolution {text!r}; use THETA, THETAxOFFSET or THETAxOFFSETxOFFSET")


def cmd_validate(args) -> int:
    n_theta, n_offset = _parse_resolution(args.resolution)
    quadrature = expected_crossings_quadrature(n_theta, n_offset)
    closed_form = expected_crossings_closed_form(1.0, 1.0)
    gap = abs(quadrature - closed_form)
    print(f"quadrature ({n_theta}x{n_offset}x{n_offset}) = {quadrature:.6f}")
    print(f"closed form 12/pi = {closed_form:.6f}")
    print(f"absolute gap = {gap:.6f}")
    ok = gap < args.tolerance
    if args.mc_trials:
        seed = _resolve_seed(args.seed)
        rng = RngConfig(seed, 0).stream()
        agg = run_triangle_trials(args.mc_trials, rng)
        mc_mean = agg.crossing_rate
        se = agg.crossing_rate_standard_error()
        print(f"monte carlo mean ({agg.trials} trials) = {mc_mean:.6f}")
        if se:
            sigmas = abs(quadrature - mc_mean) / se
            print(f"monte carlo gap = {abs(quadrature - mc_mean):.6f} ({sigmas:.2f} standard errors)")
            ok = ok and sigmas < 3.0
        else:
            ok = False
    if ok:
        print(f"PASS (tolerance {args.tolerance})")
        return 0
    print(f"FAIL (tolerance {args.tolerance})")
    return _FAILURE_EXIT


def build_parser() -> _Parser:
    parser = _Parser(prog="buffon", description="Monte Carlo pi estimation by casting shapes on a grid")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("estimate", help="single run: cast and print the pi estimate")
    p.add_argument("--method", choices=("triangle", "needle"), default="triangle")
    p.add_argument("--trials", type=int, default=1_000_000, help="casts in the run (default 1000000)")
    p.add_argument("--seed", type=int, default=None, help="RNG seed; generated and printed if omitted")
    p.add_argument("--ratio", type=float, default=None, help="needle length / line spacing (needle only, default 1)")
    p.add_argument("--json", default=None, metavar="PATH", help="write a JSON report")
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("batch", help="many runs on independent streams, with histogram")
    p.add_argument("--runs", type=int, default=1000)
    p.add_argument("--trials", type=int, default=1_000_000, help="casts per run")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--method", choices=("triangle", "needle"), default="triangle")
    p.add_argument("--ratio", type=float, default=None)
    p.add_argument("--bins", type=int, default=40, help="histogram bin count")
    p.add_argument("--csv", default=None, metavar="PATH", help="write per-run estimates")
    p.add_argument("--svg", default=None, metavar="PATH", help="write the histogram figure")
    p.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("render", help="write SVG snapshots of the first casts of a stream")
    p.add_argument("--images", type=int, default=20)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=".", metavar="DIR")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("validate", help="check the crossing-rate constant 12/pi")
    p.add_argument("--resolution", default="360x200x200", help="quadrature lattice (default 360x200x200)")
    p.add_argument("--tolerance", type=float, default=1e-3)
    p.add_argument("--mc-trials", type=int, default=None, help="also compare a Monte Carlo mean")
    p.add_argument("--seed", type=int, default=None, help="seed for the Monte Carlo leg")
    p.set_defaults(func=cmd_validate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _USAGE_EXIT
    except (DegenerateSampleError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _FAILURE_EXIT


def app() -> None:
    sys.exit(main())


if __name__ == "__main__":
    app()
