"""Command-line front end.

Subcommands:
    sweep    mixing-angle sweep to CSV (one row per alpha)
    evolve   dump one sampled trajectory to CSV
    tables   print the reference tables (I: volumes/complexity,
             II: efficiencies/curvature, III: times/lengths)
    figdata  dense alpha grids for external plotting
    verify   run the oracle/symmetry harness

Angles are accepted as decimal radians or as fractions of pi written
``k/n pi`` (e.g. ``3/16pi``), which keeps grid values exact.
"""

import argparse
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .complexity import AnalysisConfig, DEFAULT_AVERAGING_MODE, analyze
from .errors import BlochComplexityError, UnwrapAmbiguity
from .hamiltonians import (SubOptimalParams, equatorial_problem,
                           evolution_time, suboptimal_field)
from .metrics import (curvature_coefficient, geodesic_efficiency, path_length,
                      speed_efficiency)
from .trajectory import DEFAULT_SAMPLES, sample_trajectory, write_trajectory_csv
from .verify import run_verification

_FRACTION_OF_PI = re.compile(r"^\s*([+-]?\d+)\s*/\s*(\d+)\s*pi\s*$")

SWEEP_COLUMNS = ("alpha", "t_ab", "s", "eta_ge", "eta_se", "kappa2",
                 "v_bar", "v_max", "complexity", "l_c", "degenerate")


@dataclass(frozen=True)
class SweepConfig:
    alpha_start: float = 0.0
    alpha_end: float = np.pi
    steps: int = 16
    theta_ab: float = np.pi / 2.0
    omega: float = 1.0
    samples: int = DEFAULT_SAMPLES
    averaging_mode: str = DEFAULT_AVERAGING_MODE
    output_path: str = None

    def __post_init__(self):
        if self.steps < 1:
            raise ValueError("steps must be >= 1")

    @property
    def alphas(self):
        if self.alpha_start == self.alpha_end:
            return np.array([self.alpha_start])
        return np.linspace(self.alpha_start, self.alpha_end, self.steps + 1)


def parse_angle(text):
    """Decimal radians, or an exact fraction of pi like ``3/16pi``."""
    match = _FRACTION_OF_PI.match(text)
    if match:
        return int(match.group(1)) / int(match.group(2)) * np.pi
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"cannot parse angle {text!r}: use radians or 'k/n pi'") from None


def fmt(value):
    return f"{value:.12g}"


def cmd_sweep(cfg):
    problem = equatorial_problem(cfg.theta_ab, energy=cfg.omega)
    config = AnalysisConfig(samples=cfg.samples,
                            averaging_mode=cfg.averaging_mode)

    def row(alpha):
        rep = analyze(problem, SubOptimalParams(alpha), config)
        return ",".join([fmt(rep.alpha), fmt(rep.t_ab), fmt(rep.s),
                         fmt(rep.eta_ge), fmt(rep.eta_se), fmt(rep.kappa2),
                         fmt(rep.volume.v_bar), fmt(rep.volume.v_max),
                         fmt(rep.complexity), fmt(rep.length_scale),
                         rep.degeneracy_label])

    failures = 0
    lines = [",".join(SWEEP_COLUMNS)]
    with ThreadPoolExecutor() as pool:
        futures = [(alpha, pool.submit(row, alpha)) for alpha in cfg.alphas]
        for alpha, future in futures:
            try:
                lines.append(future.result())
            except UnwrapAmbiguity as err:
                print(f"sweep: alpha={alpha:.12g} aborted: {err}",
                      file=sys.stderr)
                failures += 1
    status = _write_lines(lines, cfg.output_path)
    return status if status else (1 if failures else 0)


def cmd_evolve(args):
    problem = equatorial_problem(args.theta_ab, energy=args.omega)
    traj = sample_trajectory(problem, SubOptimalParams(args.alpha),
                             args.samples)
    if args.out is None:
        write_trajectory_csv(traj, sys.stdout)
        return 0
    try:
        with open(args.out, "w", newline="") as stream:
            write_trajectory_csv(traj, stream)
    except OSError as err:
        print(f"error: cannot write {args.out}: {err}", file=sys.stderr)
        return 1
    return 0


_TABLE_ALPHAS = [Fraction(k, 16) for k in range(0, 9)]


def _pi_label(frac):
    if frac == 0:
        return "0"
    if frac == 1:
        return "pi"
    return f"{frac} pi"


def cmd_tables(which, samples=DEFAULT_SAMPLES):
    problem = equatorial_problem()
    config = AnalysisConfig(samples=samples)
    rows = []
    for frac in _TABLE_ALPHAS:
        alpha = float(frac) * np.pi
        params = SubOptimalParams(alpha)
        label = _pi_label(frac)
        sup = _pi_label(1 - frac)
        if which == "III":
            rows.append((label, evolution_time(problem, params),
                         path_length(problem, params), sup))
        else:
            rep = analyze(problem, params, config)
            if which == "I":
                rows.append((label, rep.volume.v_bar, rep.volume.v_max,
                             rep.complexity, rep.length_scale, sup))
            else:
                rows.append((label, rep.eta_ge, rep.eta_se, rep.kappa2,
                             rep.complexity, rep.length_scale, sup))
    headers = {
        "I": ("alpha", "v_bar", "v_max", "C", "L_C", "pi-alpha"),
        "II": ("alpha", "eta_ge", "eta_se", "kappa2", "C", "L_C", "pi-alpha"),
        "III": ("alpha", "t", "s", "pi-alpha"),
    }[which]
    _print_table(headers, rows)
    return 0


def _print_table(headers, rows):
    formatted = [[cell if isinstance(cell, str) else f"{cell:.4f}"
                  for cell in row] for row in rows]
    widths = [max(len(h), *(len(r[i]) for r in formatted))
              for i, h in enumerate(headers)]
    print("  ".join(h.rjust(w) for h, w in zip(headers, widths)))
    for row in formatted:
        print("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))


def cmd_figdata(args):
    alphas = np.linspace(0.0, np.pi, args.points)
    problem = equatorial_problem(theta_ab=args.theta_ab, energy=args.omega)
    lines = []
    if args.which == "fig2":
        lines.append("alpha,eta_ge,eta_se,kappa2")
        for alpha in alphas:
            params = SubOptimalParams(alpha)
            f = suboptimal_field(problem, params)
            lines.append(",".join([fmt(alpha),
                                   fmt(geodesic_efficiency(problem, params)),
                                   fmt(speed_efficiency(f, problem.a_hat)),
                                   fmt(curvature_coefficient(f, problem.a_hat))]))
    else:
        column = "complexity" if args.which == "fig4" else "l_c"
        lines.append(f"alpha,{column}")
        config = AnalysisConfig(samples=args.samples)
        for alpha in alphas:
            rep = analyze(problem, SubOptimalParams(alpha), config)
            value = rep.complexity if args.which == "fig4" else rep.length_scale
            lines.append(f"{fmt(alpha)},{fmt(value)}")
    return _write_lines(lines, args.out)


def cmd_verify():
    records = run_verification()
    print("check,param,delta,pass")
    for record in records:
        print(record.line())
    return 0 if all(r.passed for r in records) else 1


def _write_lines(lines, path):
    text = "\n".join(lines) + "\n"
    if path is None:
        sys.stdout.write(text)
        return 0
    try:
        with open(path, "w", newline="") as stream:
            stream.write(text)
    except OSError as err:
        print(f"error: cannot write {path}: {err}", file=sys.stderr)
        return 1
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="blochcomplexity",
        description="Geometric quality metrics and volume-based complexity "
                    "of stationary qubit evolutions.")
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="mixing-angle sweep to CSV")
    sweep.add_argument("--alpha-start", type=parse_angle, default=0.0)
    sweep.add_argument("--alpha-end", type=parse_angle, default=np.pi)
    sweep.add_argument("--steps", type=int, default=16)
    _common_flags(sweep)
    sweep.add_argument("--averaging",
                       choices=("uniform", "appendix-piecewise"),
                       default=DEFAULT_AVERAGING_MODE.replace("_", "-"))
    sweep.add_argument("--out", default=None)

    evolve = sub.add_parser("evolve", help="dump one trajectory to CSV")
    evolve.add_argument("--alpha", type=parse_angle, required=True)
    _common_flags(evolve)
    evolve.add_argument("--out", default=None)

    tables = sub.add_parser("tables", help="print a reference table")
    tables.add_argument("which", choices=("I", "II", "III"))
    tables.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)

    figdata = sub.add_parser("figdata", help="dense alpha-grid CSV")
    figdata.add_argument("which", choices=("fig2", "fig4", "fig5"))
    figdata.add_argument("--points", type=int, default=257)
    _common_flags(figdata)
    figdata.add_argument("--out", default=None)

    sub.add_parser("verify", help="run the oracle/symmetry harness")
    return parser


def _common_flags(sub):
    sub.add_argument("--theta-ab", type=parse_angle, default=np.pi / 2.0)
    sub.add_argument("--omega", type=float, default=1.0)
    sub.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "sweep":
            cfg = SweepConfig(alpha_start=args.alpha_start,
                              alpha_end=args.alpha_end,
                              steps=args.steps,
                              theta_ab=args.theta_ab,
                              omega=args.omega,
                              samples=args.samples,
                              averaging_mode=args.averaging.replace("-", "_"),
                              output_path=args.out)
            return cmd_sweep(cfg)
        if args.command == "evolve":
            return cmd_evolve(args)
        if args.command == "tables":
            return cmd_tables(args.which, args.samples)
        if args.command == "figdata":
            if args.points < 2:
                print("error: --points must be >= 2", file=sys.stderr)
                return 2
            return cmd_figdata(args)
        return cmd_verify()
    except (BlochComplexityError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
