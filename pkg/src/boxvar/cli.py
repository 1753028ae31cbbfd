"""Command-line driver.

    boxvar energies --r-max 10
    boxvar wavefunction --r 0 --format both
    boxvar compare --r-max 10 --output-dir out/
    boxvar optimize --r 0 --method golden
    boxvar validate
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from . import report, validation
from .box_model import PhysicalParams
from .errors import DomainError, EmitError
from .exact_ho import exact_energy, exact_wavefunction
from .numerics import DEFAULT_ORDER
from .variational import solve, solve_golden

COMMANDS = ("energies", "wavefunction", "compare", "optimize", "validate")
COMPARE_TRACE_STATES = (0, 1)
WRITERS = ("energies", "wavefunction", "compare")


@dataclass(frozen=True)
class RunConfig:
    command: str
    r: int = 0
    r_max: int = 10
    mass: float = 1.0
    omega: float = 1.0
    hbar: float = 1.0
    n_points: int = 401
    quadrature_order: int = DEFAULT_ORDER
    output_dir: Path = Path(".")
    format: str = "csv"
    method: str = "analytic"
    exact: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise DomainError(f"unknown command {self.command!r}")
        if self.n_points < 3 or self.n_points % 2 == 0:
            raise DomainError(f"--n-points must be odd and >= 3, got {self.n_points}")
        if self.quadrature_order < 1:
            raise DomainError(f"--quadrature-order must be >= 1, got {self.quadrature_order}")
        if self.r < 0 or self.r_max < 0:
            raise DomainError("quantum numbers must be non-negative")
        # raises on non-positive physical inputs
        self.params

    @property
    def params(self) -> PhysicalParams:
        return PhysicalParams(self.mass, self.omega, self.hbar)

    @property
    def want_csv(self) -> bool:
        return self.format in ("csv", "both")

    @property
    def want_plot(self) -> bool:
        return self.format in ("plot", "both")


def _nonneg_int(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _positive_float(text):
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mass", type=_positive_float, default=1.0)
    common.add_argument("--omega", type=_positive_float, default=1.0)
    common.add_argument("--hbar", type=_positive_float, default=1.0)
    common.add_argument("--n-points", type=int, default=401, help="trace grid size (odd)")
    common.add_argument("--quadrature-order", type=int, default=DEFAULT_ORDER,
                        help="minimum Gauss-Legendre order for overlaps")
    common.add_argument("--output-dir", type=Path, default=Path("."))
    common.add_argument("--format", choices=("csv", "plot", "both"), default="csv")

    parser = argparse.ArgumentParser(
        prog="boxvar",
        description="Variational harmonic oscillator with particle-in-a-box trial states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("energies", parents=[common], help="approximate vs exact eigenenergies")
    p.add_argument("--r-max", type=_nonneg_int, default=10)

    p = sub.add_parser("wavefunction", parents=[common], help="sample optimized and exact wavefunctions")
    p.add_argument("--r", type=_nonneg_int, default=0)
    p.add_argument("--exact", action="store_true", help="also print the exact state's summary")

    p = sub.add_parser("compare", parents=[common], help="energy table, overlaps, peak ratio and traces")
    p.add_argument("--r-max", type=_nonneg_int, default=10)

    p = sub.add_parser("optimize", parents=[common], help="optimal box for one quantum number")
    p.add_argument("--r", type=_nonneg_int, default=0)
    p.add_argument("--method", choices=("analytic", "golden"), default="analytic")

    sub.add_parser("validate", parents=[common], help="run the oracle suite")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    fields = {k: v for k, v in vars(ns).items() if v is not None and k in RunConfig.__dataclass_fields__}
    return RunConfig(**fields)


def _print_energy_table(rows) -> None:
    print(f"{'r':>3}  {'E*/hw':>12}  {'E/hw':>8}  {'ratio':>10}  {'rel_error':>10}")
    for row in rows:
        print(f"{row.r:>3}  {row.e_star_over_ew:>12.7f}  {row.e_exact_over_ew:>8.1f}  "
              f"{row.ratio:>10.7f}  {row.rel_error:>+10.6f}")


def _emit(cfg: RunConfig, stem: str, data, csv_ok: bool = True, plot_ok: bool = True) -> None:
    if cfg.want_csv and csv_ok:
        path = cfg.output_dir / f"{stem}.csv"
        report.emit_csv(data, path)
        print(f"wrote {path}")
    if cfg.want_plot and plot_ok:
        path = cfg.output_dir / f"{stem}.svg"
        report.emit_plot(data, path)
        print(f"wrote {path}")


def run_energies(cfg: RunConfig) -> int:
    rows = report.energy_table(cfg.r_max, cfg.params)
    _print_energy_table(rows)
    _emit(cfg, "energies", rows)
    return 0


def run_wavefunction(cfg: RunConfig) -> int:
    params = cfg.params
    sol = solve(cfg.r, params)
    traces = report.wavefunction_traces(cfg.r, params, cfg.n_points)
    print(f"r = {cfg.r}: L* = {sol.l_star:.10g}, E* = {sol.e_star:.10g}, "
          f"phi*(0) = {float(traces[0].values[cfg.n_points // 2]):.10g}")
    if cfg.exact:
        print(f"exact: E = {exact_energy(cfg.r, params):.10g}, "
              f"psi(0) = {float(exact_wavefunction(cfg.r, params, 0.0)):.10g}")
    _emit(cfg, f"wavefunction_r{cfg.r}", traces)
    return 0


def run_compare(cfg: RunConfig) -> int:
    params = cfg.params
    rows = report.energy_table(cfg.r_max, params)
    _print_energy_table(rows)
    overlaps = report.overlap_diagnostics(cfg.r_max, params, cfg.quadrature_order)
    print()
    print(f"{'r':>3}  {'|<phi*|psi>|':>14}")
    for row in overlaps:
        print(f"{row.r:>3}  {row.abs_overlap:>14.10f}")
    print()
    print(f"peak ratio phi0*(0)/phi0(0) = {report.peak_ratio(params):.10f}")

    _emit(cfg, "energies", rows)
    _emit(cfg, "overlaps", overlaps, plot_ok=False)
    for r in COMPARE_TRACE_STATES:
        if r <= cfg.r_max:
            _emit(cfg, f"wavefunction_r{r}", report.wavefunction_traces(r, params, cfg.n_points))
    return 0


def run_optimize(cfg: RunConfig) -> int:
    params = cfg.params
    analytic = solve(cfg.r, params)
    sol = analytic if cfg.method == "analytic" else solve_golden(cfg.r, params)
    print(f"r = {cfg.r} ({cfg.method})")
    print(f"  eps* = {sol.epsilon_star:.15g}")
    print(f"  L*   = {sol.l_star:.15g}")
    print(f"  E*   = {sol.e_star:.15g}")
    if cfg.method == "golden":
        print("analytic")
        for name, a, g in (
            ("eps*", analytic.epsilon_star, sol.epsilon_star),
            ("L*  ", analytic.l_star, sol.l_star),
            ("E*  ", analytic.e_star, sol.e_star),
        ):
            print(f"  {name} = {a:.15g}  (difference {g - a:+.3e})")
    return 0


def run_validate(cfg: RunConfig) -> int:
    results = validation.run_all(cfg.params)
    for res in results:
        print(res.line())
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 1 if failed else 0


HANDLERS = {
    "energies": run_energies,
    "wavefunction": run_wavefunction,
    "compare": run_compare,
    "optimize": run_optimize,
    "validate": run_validate,
}


def run(cfg: RunConfig) -> int:
    return HANDLERS[cfg.command](cfg)


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = config_from_args(ns)
    except DomainError as exc:
        parser.error(str(exc))
    try:
        if cfg.command in WRITERS:
            cfg.output_dir.mkdir(parents=True, exist_ok=True)
        return run(cfg)
    except (EmitError, OSError) as exc:
        print(f"boxvar: error: {exc}", file=sys.stderr)
        return 1
    except (DomainError, ArithmeticError) as exc:
        print(f"boxvar: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
