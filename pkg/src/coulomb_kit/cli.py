"""Command-line front end: parameter sweeps and machine-readable tables.

Subcommands
-----------
amplitude      f(theta) over an angle grid (closed form or regularized series)
cross-section  |f(theta)|^2 over an angle grid
phase-shifts   l, delta_l and S_l for l = 0 .. lmax
partial-sum    raw (divergent) partial sums at a single angle
kernel-demo    damped completeness kernel over an x grid
verify         series vs closed-form amplitude at one angle

Parameters are given either directly (--k, --beta) or physically
(--mu, --kappa, --E, optionally --hbar); mixing the two styles is a
usage error.  Angles are radians unless --degrees is passed.

Output is one table per invocation, CSV (17-significant-digit scientific
notation) or JSON ({"meta": {...}, "rows": [...]} with every flag echoed
in meta), to stdout or --output PATH.  Identical invocations produce
byte-identical output.

Exit codes: 0 success, 2 usage error, 3 domain error, 4 verification
failure, 5 I/O error.  The environment variable COULOMB_KIT_THREADS
(integer >= 1) caps the worker count for grid sweeps; results are
assembled in grid order either way.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import coulomb_core as core
from . import summation as summ
from .errors import ConfigError, DomainError

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_VERIFY = 4
EXIT_IO = 5

THREADS_ENV_VAR = "COULOMB_KIT_THREADS"

LINEAR_SPACING = "linear"
LOG_SPACING = "log"

_GRID_COMMANDS = ("amplitude", "cross-section")
_PARAM_COMMANDS = ("amplitude", "cross-section", "phase-shifts", "partial-sum", "verify")
_SUMMATION_COMMANDS = ("amplitude", "verify")


@dataclass(frozen=True)
class AngleGrid:
    """Ordered scattering angles, forward direction excluded."""

    theta_min: float
    theta_max: float
    count: int
    spacing: str = LINEAR_SPACING

    def __post_init__(self):
        if self.count < 1:
            raise ConfigError(f"--count must be >= 1, got {self.count}")
        if self.spacing not in (LINEAR_SPACING, LOG_SPACING):
            raise ConfigError(f"unknown spacing {self.spacing!r}")
        core._validate_theta(self.theta_min)
        core._validate_theta(self.theta_max)
        if self.theta_min > self.theta_max:
            raise ConfigError(
                f"--theta-min ({self.theta_min!r}) must not exceed "
                f"--theta-max ({self.theta_max!r})"
            )

    def thetas(self) -> np.ndarray:
        if self.spacing == LOG_SPACING:
            return np.geomspace(self.theta_min, self.theta_max, self.count)
        return np.linspace(self.theta_min, self.theta_max, self.count)


@dataclass(frozen=True)
class RunConfig:
    """Validated state of one invocation, resolved from the parsed flags.

    ``params``, ``angle_grid`` and ``summation`` are only populated for
    the commands that use them; ``meta`` echoes every flag verbatim for
    the JSON sink.
    """

    command: str
    params: core.PhysicalParams | None
    angle_grid: AngleGrid | None
    summation: summ.SummationConfig | None
    output_format: str
    output_path: str
    meta: dict


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coulomb-kit",
        description="Coulomb scattering amplitudes, phase shifts and "
        "regularized partial-wave sums.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output_flags(p):
        p.add_argument("--format", choices=["csv", "json"], default="csv",
                       help="output table format (default csv)")
        p.add_argument("--output", default="-", metavar="PATH",
                       help="output file, '-' for stdout (default)")

    def add_param_flags(p):
        g = p.add_argument_group("parameters (direct: --k/--beta, or "
                                 "physical: --mu/--kappa/--E/--hbar)")
        g.add_argument("--k", type=float, default=None, help="wavenumber (> 0)")
        g.add_argument("--beta", type=float, default=None,
                       help="dimensionless Coulomb strength (>0 attractive)")
        g.add_argument("--mu", type=float, default=None, help="reduced mass (> 0)")
        g.add_argument("--kappa", type=float, default=None,
                       help="coupling, energy*length (>0 attractive)")
        g.add_argument("--E", type=float, default=None, help="energy (> 0)")
        g.add_argument("--hbar", type=float, default=None,
                       help="hbar (physical style only; default 1)")

    def add_grid_flags(p):
        g = p.add_argument_group("angle grid")
        g.add_argument("--theta-min", type=float, required=True,
                       help="smallest angle (> 0)")
        g.add_argument("--theta-max", type=float, required=True,
                       help="largest angle (<= pi)")
        g.add_argument("--count", type=int, default=64,
                       help="number of grid angles (default 64)")
        g.add_argument("--spacing", choices=[LINEAR_SPACING, LOG_SPACING],
                       default=LINEAR_SPACING, help="grid spacing (default linear)")
        g.add_argument("--degrees", action="store_true",
                       help="interpret angles as degrees")

    def add_summation_flags(p):
        g = p.add_argument_group("summation")
        g.add_argument("--lmax", type=int, default=None,
                       help="truncation order (default: matched to the eps schedule)")
        g.add_argument("--eps-first", type=float, default=0.1,
                       help="largest smoothing parameter (default 0.1)")
        g.add_argument("--eps-ratio", type=float, default=2.0,
                       help="geometric ratio between eps values (default 2)")
        g.add_argument("--eps-count", type=int, default=6,
                       help="number of eps values (default 6)")
        g.add_argument("--extrapolation-order", type=int, default=4,
                       help="polynomial extrapolation order (default 4)")
        g.add_argument("--damping", choices=[summ.ABEL_DAMPING, summ.HEAT_DAMPING],
                       default=summ.ABEL_DAMPING,
                       help="damping scheme (default abel)")

    p = sub.add_parser(
        "amplitude", help="scattering amplitude over an angle grid",
        epilog="output columns: theta, re_f, im_f, abs_f_sq, method")
    add_param_flags(p)
    add_grid_flags(p)
    add_summation_flags(p)
    p.add_argument("--method", choices=["closed", "series"], default="closed",
                   help="closed form (default) or regularized series")
    add_output_flags(p)
    p.set_defaults(handler=_cmd_amplitude)

    p = sub.add_parser(
        "cross-section", help="differential cross section over a grid",
        epilog="output columns: theta, dsigma_domega")
    add_param_flags(p)
    add_grid_flags(p)
    add_output_flags(p)
    p.set_defaults(handler=_cmd_cross_section)

    p = sub.add_parser(
        "phase-shifts", help="phase shifts and S-matrix elements",
        epilog="output columns: l, delta, re_S, im_S")
    add_param_flags(p)
    p.add_argument("--lmax", type=int, default=20,
                   help="largest partial-wave index (default 20)")
    add_output_flags(p)
    p.set_defaults(handler=_cmd_phase_shifts)

    p = sub.add_parser(
        "partial-sum", help="raw partial sums at one angle",
        epilog="output columns: n, re_sum, im_sum, abs_sum")
    add_param_flags(p)
    p.add_argument("--theta", type=float, required=True, help="angle (> 0)")
    p.add_argument("--degrees", action="store_true",
                   help="interpret --theta as degrees")
    p.add_argument("--lmax", type=int, default=200,
                   help="largest partial sum index (default 200)")
    add_output_flags(p)
    p.set_defaults(handler=_cmd_partial_sum)

    p = sub.add_parser(
        "kernel-demo", help="damped completeness kernel over x",
        epilog="output columns: x, kernel")
    p.add_argument("--epsilon", type=float, required=True,
                   help="smoothing parameter (> 0)")
    p.add_argument("--lmax", type=int, default=500,
                   help="truncation order (default 500)")
    p.add_argument("--x-min", type=float, default=-1.0,
                   help="smallest abscissa (default -1)")
    p.add_argument("--x-max", type=float, default=1.0,
                   help="largest abscissa (default 1)")
    p.add_argument("--count", type=int, default=201,
                   help="number of abscissae (default 201)")
    add_output_flags(p)
    p.set_defaults(handler=_cmd_kernel_demo)

    p = sub.add_parser(
        "verify", help="series vs closed amplitude at one angle",
        epilog="output columns: theta, re_closed, im_closed, re_series, "
               "im_series, abs_error, rel_error")
    add_param_flags(p)
    p.add_argument("--theta", type=float, required=True, help="angle (> 0)")
    p.add_argument("--degrees", action="store_true",
                   help="interpret --theta as degrees")
    add_summation_flags(p)
    p.add_argument("--tol", type=float, default=1e-3,
                   help="relative error bound for success (default 1e-3)")
    add_output_flags(p)
    p.set_defaults(handler=_cmd_verify)

    return parser


def _resolve_params(args) -> core.PhysicalParams:
    physical = {"mu": args.mu, "kappa": args.kappa, "E": args.E, "hbar": args.hbar}
    direct = {"k": args.k, "beta": args.beta}
    physical_given = [n for n, v in physical.items() if v is not None]
    direct_given = [n for n, v in direct.items() if v is not None]
    if physical_given and direct_given:
        raise ConfigError(
            "conflicting parameterizations: give either --k/--beta or "
            f"--mu/--kappa/--E, not both (got --{', --'.join(direct_given)} "
            f"with --{', --'.join(physical_given)})"
        )
    if physical_given:
        missing = [n for n in ("mu", "kappa", "E") if physical[n] is None]
        if missing:
            raise ConfigError(
                "physical parameterization needs --mu, --kappa and --E "
                f"(missing --{', --'.join(missing)})"
            )
        hbar = physical["hbar"] if physical["hbar"] is not None else 1.0
        return core.params_from_physical(args.mu, args.kappa, args.E, hbar)
    if args.beta is None:
        raise ConfigError("missing parameters: give --beta (with optional --k) "
                          "or the physical set --mu/--kappa/--E")
    k = args.k if args.k is not None else 1.0
    return core.PhysicalParams(k=k, beta=args.beta)


def _angle_scale(args) -> float:
    return math.pi / 180.0 if getattr(args, "degrees", False) else 1.0


def resolve_run_config(args) -> RunConfig:
    """Validate the parsed flags into a RunConfig (may raise Config/DomainError)."""
    command = args.command
    params = _resolve_params(args) if command in _PARAM_COMMANDS else None
    grid = None
    if command in _GRID_COMMANDS:
        scale = _angle_scale(args)
        grid = AngleGrid(
            theta_min=args.theta_min * scale,
            theta_max=args.theta_max * scale,
            count=args.count,
            spacing=args.spacing,
        )
    scfg = None
    if command in _SUMMATION_COMMANDS:
        scfg = summ.default_config(
            eps_first=args.eps_first,
            eps_ratio=args.eps_ratio,
            eps_count=args.eps_count,
            extrapolation_order=args.extrapolation_order,
            l_max=args.lmax,
            damping=args.damping,
        )
    meta = {k: v for k, v in vars(args).items() if k != "handler"}
    return RunConfig(
        command=command,
        params=params,
        angle_grid=grid,
        summation=scfg,
        output_format=args.format,
        output_path=args.output,
        meta=meta,
    )


def _thread_count() -> int:
    raw = os.environ.get(THREADS_ENV_VAR)
    if raw is None:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise ConfigError(
            f"{THREADS_ENV_VAR} must be an integer >= 1, got {raw!r}"
        ) from None
    if n < 1:
        raise ConfigError(f"{THREADS_ENV_VAR} must be an integer >= 1, got {raw!r}")
    return n


def _map_ordered(fn, items, threads: int):
    """Apply fn over items, preserving order; fan out when threads > 1."""
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=min(threads, len(items))) as pool:
        return list(pool.map(fn, items))


def _format_cell(value) -> str:
    if isinstance(value, bool):
        return str(value)
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.16e}"
    return str(value)


def _json_ready(value):
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    return value


def emit_table(columns, rows, output_format: str, sink: str, meta: dict) -> None:
    """Write one table to ``sink`` ('-' for stdout).

    CSV: header row, comma separator, '\\n' newlines, floats in
    17-significant-digit scientific notation (exact round-trip).
    JSON: single object {"meta": {...}, "rows": [...]} with one object
    per row; meta echoes every flag of the invocation verbatim.
    """
    if output_format == "json":
        payload = {
            "meta": {k: _json_ready(v) for k, v in meta.items()},
            "rows": [
                {c: _json_ready(v) for c, v in zip(columns, row)} for row in rows
            ],
        }
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        lines = [",".join(columns)]
        lines.extend(",".join(_format_cell(v) for v in row) for row in rows)
        text = "\n".join(lines) + "\n"
    if sink == "-":
        sys.stdout.write(text)
    else:
        with open(sink, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _cmd_amplitude(args, rc: RunConfig, threads: int) -> int:
    if args.method == "series":
        def one(theta):
            r = summ.series_amplitude(float(theta), rc.params, rc.summation)
            return (r.theta, r.f.real, r.f.imag, abs(r.f) ** 2, r.method)
    else:
        def one(theta):
            r = core.closed_amplitude(float(theta), rc.params)
            return (r.theta, r.f.real, r.f.imag, abs(r.f) ** 2, r.method)

    rows = _map_ordered(one, rc.angle_grid.thetas(), threads)
    emit_table(("theta", "re_f", "im_f", "abs_f_sq", "method"),
               rows, rc.output_format, rc.output_path, rc.meta)
    return EXIT_OK


def _cmd_cross_section(args, rc: RunConfig, threads: int) -> int:
    def one(theta):
        return (float(theta), core.differential_cross_section(float(theta), rc.params))

    rows = _map_ordered(one, rc.angle_grid.thetas(), threads)
    emit_table(("theta", "dsigma_domega"),
               rows, rc.output_format, rc.output_path, rc.meta)
    return EXIT_OK


def _cmd_phase_shifts(args, rc: RunConfig, threads: int) -> int:
    if args.lmax < 0:
        raise DomainError(f"--lmax must be >= 0, got {args.lmax}")
    rows = []
    for l in range(args.lmax + 1):
        pw = core.s_matrix(l, rc.params)
        rows.append((pw.l, pw.delta, pw.S.real, pw.S.imag))
    emit_table(("l", "delta", "re_S", "im_S"),
               rows, rc.output_format, rc.output_path, rc.meta)
    return EXIT_OK


def _cmd_partial_sum(args, rc: RunConfig, threads: int) -> int:
    theta = args.theta * _angle_scale(args)
    sums = summ.unregularized_partial_sums(theta, rc.params, args.lmax)
    rows = [(n, s.real, s.imag, abs(s)) for n, s in enumerate(sums)]
    emit_table(("n", "re_sum", "im_sum", "abs_sum"),
               rows, rc.output_format, rc.output_path, rc.meta)
    return EXIT_OK


def _cmd_kernel_demo(args, rc: RunConfig, threads: int) -> int:
    if args.count < 1:
        raise ConfigError(f"--count must be >= 1, got {args.count}")
    xs = np.linspace(args.x_min, args.x_max, args.count)
    values = summ.completeness_kernel(xs, args.epsilon, args.lmax)
    rows = [(float(x), float(v)) for x, v in zip(xs, values)]
    emit_table(("x", "kernel"),
               rows, rc.output_format, rc.output_path, rc.meta)
    return EXIT_OK


def _cmd_verify(args, rc: RunConfig, threads: int) -> int:
    theta = args.theta * _angle_scale(args)
    closed = core.closed_amplitude(theta, rc.params)
    series = summ.series_amplitude(theta, rc.params, rc.summation)
    abs_error = abs(series.f - closed.f)
    denom = abs(closed.f)
    rel_error = abs_error / denom if denom > 0.0 else abs_error
    rows = [(
        theta, closed.f.real, closed.f.imag, series.f.real, series.f.imag,
        abs_error, rel_error,
    )]
    emit_table(("theta", "re_closed", "im_closed", "re_series", "im_series",
                "abs_error", "rel_error"),
               rows, rc.output_format, rc.output_path, rc.meta)
    return EXIT_OK if rel_error <= args.tol else EXIT_VERIFY


def run(argv) -> int:
    """Execute one CLI invocation; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        threads = _thread_count()
        rc = resolve_run_config(args)
        return args.handler(args, rc, threads)
    except ConfigError as exc:
        print(f"coulomb-kit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, OverflowError) as exc:
        print(f"coulomb-kit: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"coulomb-kit: i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
