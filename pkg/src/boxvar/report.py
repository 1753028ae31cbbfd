"""Comparison tables, wavefunction traces and their CSV / SVG output."""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from . import svgplot
from .box_model import NATURAL_UNITS, BoxState, PhysicalParams, box_wavefunction
from .box_model import check_quantum_number as _check_r
from .errors import DomainError, EmitError
from .exact_ho import exact_energy, exact_wavefunction
from .numerics import DEFAULT_ORDER, default_order, overlap
from .variational import optimized_wavefunction, solve

ENERGY_HEADER = ("r", "e_star_over_ew", "e_exact_over_ew", "ratio", "rel_error")
TRACE_HEADER = ("x", "approximate", "exact")
OVERLAP_HEADER = ("r", "abs_overlap")

APPROXIMATE = "approximate"
EXACT = "exact"


@dataclass(frozen=True)
class EnergyComparisonRow:
    """One quantum number of the variational-vs-exact energy comparison.

    ``rel_error`` is signed: ``(e_star - e_exact) / e_exact``.
    """

    r: int
    e_star_over_ew: float
    e_exact_over_ew: float
    ratio: float
    rel_error: float


@dataclass(frozen=True)
class WavefunctionTrace:
    r: int
    kind: str
    xs: np.ndarray
    values: np.ndarray
    domain_half_width: float


@dataclass(frozen=True)
class OverlapRow:
    r: int
    abs_overlap: float


def energy_table(r_max: int, params: PhysicalParams = NATURAL_UNITS) -> list[EnergyComparisonRow]:
    r_max = _check_r(r_max)
    ew = params.epsilon_omega
    rows = []
    for r in range(r_max + 1):
        e_star = solve(r, params).e_star / ew
        # dimensionless exact level, r + 1/2 without a round trip through ew
        e_exact = exact_energy(r)
        rows.append(EnergyComparisonRow(r, e_star, e_exact, e_star / e_exact, (e_star - e_exact) / e_exact))
    return rows


def peak_ratio(params: PhysicalParams = NATURAL_UNITS) -> float:
    """Ratio of the optimized to the exact ground state at the origin.

    Independent of ``params``. The closed form is cross-checked against
    pointwise evaluation of both wavefunctions.
    """
    closed = (2.0 / math.pi) ** 0.25 * ((math.pi**2 - 6.0) / 3.0) ** 0.125
    pointwise = optimized_wavefunction(0, params, 0.0) / exact_wavefunction(0, params, 0.0)
    if abs(closed - pointwise) > 1e-12:
        raise ArithmeticError(f"peak ratio mismatch: closed form {closed!r} vs pointwise {pointwise!r}")
    return closed


def trace_grid(half_width: float, n_points: int) -> np.ndarray:
    xs = np.linspace(-half_width, half_width, n_points)
    # exact mirror symmetry, so x = 0 and the endpoints land exactly
    return 0.5 * (xs - xs[::-1])


def wavefunction_traces(
    r: int, params: PhysicalParams = NATURAL_UNITS, n_points: int = 401
) -> tuple[WavefunctionTrace, WavefunctionTrace]:
    """Optimized and exact state r sampled on a shared symmetric grid."""
    r = _check_r(r)
    if n_points < 3 or n_points % 2 == 0:
        raise DomainError(f"n_points must be odd and at least 3, got {n_points!r}")
    l_star = solve(r, params).l_star
    W = max(l_star, 6.0 / math.sqrt(params.alpha))
    xs = trace_grid(W, n_points)
    approx = box_wavefunction(BoxState(r, l_star), xs)
    exact = exact_wavefunction(r, params, xs)
    return (
        WavefunctionTrace(r, APPROXIMATE, xs, approx, W),
        WavefunctionTrace(r, EXACT, xs, exact, W),
    )


def overlap_diagnostics(
    r_max: int, params: PhysicalParams = NATURAL_UNITS, min_order: int = DEFAULT_ORDER
) -> list[OverlapRow]:
    """|<phi*_r, psi_r>| over [-L*(r), L*(r)] for r = 0..r_max.

    The absolute value drops the arbitrary relative sign of the two states.
    """
    r_max = _check_r(r_max)
    rows = []
    for r in range(r_max + 1):
        L = solve(r, params).l_star
        state = BoxState(r, L)
        value = overlap(
            lambda x: box_wavefunction(state, x),
            lambda x, r=r: exact_wavefunction(r, params, x),
            -L,
            L,
            max(min_order, default_order(r)),
        )
        rows.append(OverlapRow(r, abs(value)))
    return rows


# -- output ------------------------------------------------------------------

def _num(v) -> str:
    return f"{float(v):.17g}"


def _write_text(path, write) -> None:
    path = Path(path)
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            write(fh)
    except OSError as exc:
        raise EmitError(path, exc.strerror or exc) from exc


def _write_rows(path, header, rows) -> None:
    def write(fh):
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)

    _write_text(path, write)


def write_energy_csv(rows: Sequence[EnergyComparisonRow], path) -> None:
    _write_rows(
        path,
        ENERGY_HEADER,
        [
            (row.r, _num(row.e_star_over_ew), _num(row.e_exact_over_ew), _num(row.ratio), _num(row.rel_error))
            for row in rows
        ],
    )


def write_trace_csv(traces: Sequence[WavefunctionTrace], path) -> None:
    approx, exact = _split_traces(traces)
    _write_rows(
        path,
        TRACE_HEADER,
        [(_num(x), _num(a), _num(e)) for x, a, e in zip(approx.xs, approx.values, exact.values)],
    )


def write_overlap_csv(rows: Sequence[OverlapRow], path) -> None:
    _write_rows(path, OVERLAP_HEADER, [(row.r, _num(row.abs_overlap)) for row in rows])


def _split_traces(traces):
    by_kind = {t.kind: t for t in traces}
    if set(by_kind) != {APPROXIMATE, EXACT}:
        raise DomainError("expected one approximate and one exact trace")
    approx, exact = by_kind[APPROXIMATE], by_kind[EXACT]
    if not np.array_equal(approx.xs, exact.xs):
        raise DomainError("approximate and exact traces must share a grid")
    return approx, exact


def emit_csv(data, path) -> None:
    """Write an energy table, a trace pair or overlap rows as CSV."""
    data = list(data)
    if not data:
        raise DomainError("nothing to write")
    first = data[0]
    if isinstance(first, EnergyComparisonRow):
        write_energy_csv(data, path)
    elif isinstance(first, WavefunctionTrace):
        write_trace_csv(data, path)
    elif isinstance(first, OverlapRow):
        write_overlap_csv(data, path)
    else:
        raise DomainError(f"don't know how to write {type(first).__name__}")


def emit_plot(data, path) -> None:
    """Render an energy table or a trace pair as a standalone SVG file."""
    data = list(data)
    if not data:
        raise DomainError("nothing to plot")
    first = data[0]
    if isinstance(first, EnergyComparisonRow):
        rs = [row.r for row in data]
        series = [
            svgplot.Series("approximate E*_r", rs, [row.e_star_over_ew for row in data], markers=True),
            svgplot.Series("exact E_r", rs, [row.e_exact_over_ew for row in data], markers=True),
        ]
        svg = svgplot.render(series, "Approximate vs exact eigenenergies", "r", "E / hbar omega")
    elif isinstance(first, WavefunctionTrace):
        approx, exact = _split_traces(data)
        series = [
            svgplot.Series(f"approximate phi*_{approx.r}", approx.xs, approx.values),
            svgplot.Series(f"exact phi_{exact.r}", exact.xs, exact.values),
        ]
        svg = svgplot.render(series, f"Wavefunctions, r = {approx.r}", "x", "amplitude")
    else:
        raise DomainError(f"don't know how to plot {type(first).__name__}")
    _write_text(path, lambda fh: fh.write(svg))
