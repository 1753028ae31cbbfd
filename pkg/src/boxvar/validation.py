"""Oracle suite: every closed-form result checked against an independent route.

Each check reports the worst observed error next to its tolerance. The suite
backs the ``validate`` CLI command and is cheap enough (well under a second)
to run anywhere.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .box_model import (
    NATURAL_UNITS,
    BoxState,
    PhysicalParams,
    box_ground_scale,
    box_wavefunction,
    box_wavefunction_compact,
)
from .exact_ho import EXACT_NORM_ORDER, exact_energy, exact_wavefunction, hermite, norm_window
from .numerics import (
    default_order,
    expectation_energy,
    gauss_legendre,
    integrate,
    kinetic_energy,
)
from .report import overlap_diagnostics, peak_ratio
from .variational import energy_functional, golden_bracket, minimize_functional, solve

R_MAX_BOX = 20
R_MAX_EXACT = 10
HALF_WIDTHS = (0.5, 1.0, 2.0, 5.0)
REFERENCE_PEAK_RATIO = 0.9221215996


@dataclass(frozen=True)
class CheckResult:
    name: str
    tolerance: float
    observed: float
    passed: bool

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name}: observed {self.observed:.3e} (tolerance {self.tolerance:.1e})"


def _check(name, tolerance, observed, passed=None) -> CheckResult:
    ok = observed <= tolerance if passed is None else passed
    return CheckResult(name, tolerance, float(observed), bool(ok))


def _symmetric_grid(half_width, n=101):
    xs = np.linspace(-half_width, half_width, n)
    return 0.5 * (xs - xs[::-1])


def check_quadrature_exactness() -> CheckResult:
    worst = 0.0
    for order in (1, 2, 5, 20, 64):
        rule = gauss_legendre(order)
        worst = max(worst, abs(rule.weights.sum() - 2.0) / 2.0)
        for k in range(0, 2 * order, 2):
            exact = 2.0 / (k + 1)
            approx = integrate(lambda x: x**k, -1.0, 1.0, rule)
            worst = max(worst, abs(approx - exact) / exact)
    return _check("quadrature exact on monomials up to degree 2n-1", 1e-12, worst)


def check_box_orthonormality(L: float = 1.0) -> CheckResult:
    rule = gauss_legendre(default_order(R_MAX_BOX))
    xs = L * rule.nodes
    phi = np.array([box_wavefunction(BoxState(r, L), xs) for r in range(R_MAX_BOX + 1)])
    gram = L * (phi * rule.weights) @ phi.T
    worst = float(np.max(np.abs(gram - np.eye(R_MAX_BOX + 1))))
    return _check(f"box states orthonormal, r,s <= {R_MAX_BOX}", 1e-10, worst)


def check_box_boundary_parity(L: float = 1.0) -> CheckResult:
    xs = _symmetric_grid(L)
    worst = 0.0
    for r in range(R_MAX_BOX + 1):
        st = BoxState(r, L)
        worst = max(worst, abs(box_wavefunction(st, L)), abs(box_wavefunction(st, -L)))
        worst = max(worst, np.max(np.abs(box_wavefunction(st, -xs) - st.parity * box_wavefunction(st, xs))))
        worst = max(worst, np.max(np.abs(box_wavefunction_compact(st, xs) - box_wavefunction(st, xs))))
    return _check("box states: boundary zeros, parity, compact form", 1e-12, worst)


def check_exact_orthonormality(params: PhysicalParams = NATURAL_UNITS) -> CheckResult:
    a, b = norm_window(params)
    rule = gauss_legendre(EXACT_NORM_ORDER)
    xs = 0.5 * (a + b) + 0.5 * (b - a) * rule.nodes
    psi = np.array([exact_wavefunction(r, params, xs) for r in range(R_MAX_EXACT + 1)])
    gram = 0.5 * (b - a) * (psi * rule.weights) @ psi.T
    worst = float(np.max(np.abs(gram - np.eye(R_MAX_EXACT + 1))))
    return _check(f"exact states orthonormal, r,s <= {R_MAX_EXACT}", 1e-8, worst)


def check_exact_parity(params: PhysicalParams = NATURAL_UNITS) -> CheckResult:
    xs = _symmetric_grid(6.0 / math.sqrt(params.alpha))
    worst = 0.0
    for r in range(R_MAX_BOX + 1):
        sign = -1.0 if r % 2 else 1.0
        diff = exact_wavefunction(r, params, -xs) - sign * exact_wavefunction(r, params, xs)
        worst = max(worst, float(np.max(np.abs(diff))))
    return _check("exact states have parity (-1)^r", 1e-12, worst)


def check_exact_direct_formula(params: PhysicalParams = NATURAL_UNITS) -> CheckResult:
    alpha = params.alpha
    xs = np.linspace(-6.0, 6.0, 241)
    y = xs * math.sqrt(alpha)
    worst = 0.0
    for r in range(R_MAX_EXACT + 1):
        direct = (alpha / math.pi) ** 0.25 / math.sqrt(2.0**r * math.factorial(r)) * hermite(r, y) * np.exp(-0.5 * y * y)
        worst = max(worst, float(np.max(np.abs(direct - exact_wavefunction(r, params, xs)))))
    return _check("normalized recurrence matches Hermite formula", 1e-10, worst)


def check_hermite_listed() -> CheckResult:
    listed: dict[int, Callable] = {
        0: lambda y: np.ones_like(y),
        1: lambda y: 2 * y,
        2: lambda y: 4 * y**2 - 2,
        3: lambda y: 8 * y**3 - 12 * y,
    }
    ys = np.array([-2.0, -1.0, 0.0, 1.0, 2.0])
    worst = max(float(np.max(np.abs(hermite(n, ys) - f(ys)))) for n, f in listed.items())
    return _check("Hermite recurrence reproduces H_0..H_3", 0.0, worst)


def check_quadrature_vs_closed_form(params: PhysicalParams = NATURAL_UNITS) -> CheckResult:
    worst = 0.0
    for r in range(R_MAX_BOX + 1):
        for L in HALF_WIDTHS:
            quad = expectation_energy(BoxState(r, L), params)
            closed = energy_functional(r, box_ground_scale(L, params), params)
            worst = max(worst, abs(quad - closed) / abs(closed))
    return _check("quadrature <H> matches closed-form energy functional", 1e-9, worst)


def check_kinetic_dirichlet(params: PhysicalParams = NATURAL_UNITS) -> CheckResult:
    worst = 0.0
    for r in range(R_MAX_BOX + 1):
        for L in HALF_WIDTHS:
            expected = (r + 1) ** 2 * box_ground_scale(L, params)
            worst = max(worst, abs(kinetic_energy(BoxState(r, L), params) / expected - 1.0))
    return _check("first-derivative kinetic energy equals (r+1)^2 eps", 1e-10, worst)


def check_golden_vs_analytic(params: PhysicalParams = NATURAL_UNITS) -> list[CheckResult]:
    worst_eps = worst_e = 0.0
    for r in range(R_MAX_BOX + 1):
        sol = solve(r, params)
        for seeded in (False, True):
            res = minimize_functional(r, params, bracket=golden_bracket(r, params, seeded=seeded))
            worst_eps = max(worst_eps, abs(res.x_min / sol.epsilon_star - 1.0))
            worst_e = max(worst_e, abs(res.f_min / sol.e_star - 1.0))
    return [
        _check("golden-section eps* matches closed form", 1e-8, worst_eps),
        _check("golden-section E* matches closed form", 1e-10, worst_e),
    ]


def check_stationarity(params: PhysicalParams = NATURAL_UNITS) -> list[CheckResult]:
    ew = params.epsilon_omega
    worst = 0.0
    is_min = True
    for r in range(R_MAX_BOX + 1):
        eps = solve(r, params).epsilon_star
        h = 1e-5 * eps
        deriv = (energy_functional(r, eps + h, params) - energy_functional(r, eps - h, params)) / (2 * h)
        worst = max(worst, abs(deriv) / ew)
        e0 = energy_functional(r, eps, params)
        is_min &= energy_functional(r, 0.99 * eps, params) > e0 and energy_functional(r, 1.01 * eps, params) > e0
    return [
        _check("dE/d(eps) vanishes at eps* (units of hbar omega)", 1e-6, worst),
        _check("eps* is a minimum, not a saddle", 0.0, 0.0 if is_min else 1.0, is_min),
    ]


def check_crossover(params: PhysicalParams = NATURAL_UNITS, r_max: int = 200) -> CheckResult:
    bad = [
        r for r in range(r_max + 1)
        if (solve(r, params).e_star > exact_energy(r, params)) != (r <= 3)
    ]
    return _check("E* above exact for r <= 3, below for r >= 4", 0.0, len(bad), not bad)


def check_peak_ratio(params: PhysicalParams = NATURAL_UNITS) -> CheckResult:
    return _check("peak ratio phi0*(0)/phi0(0)", 1e-9, abs(peak_ratio(params) - REFERENCE_PEAK_RATIO))


def check_overlap_bound(params: PhysicalParams = NATURAL_UNITS) -> CheckResult:
    worst = max(row.abs_overlap for row in overlap_diagnostics(R_MAX_EXACT, params)) - 1.0
    return _check("|<phi*_r, psi_r>| <= 1", 1e-10, max(worst, 0.0))


def run_all(params: PhysicalParams = NATURAL_UNITS) -> list[CheckResult]:
    results = [
        check_quadrature_exactness(),
        check_box_orthonormality(),
        check_box_boundary_parity(),
        check_exact_orthonormality(params),
        check_exact_parity(params),
        check_exact_direct_formula(params),
        check_hermite_listed(),
        check_quadrature_vs_closed_form(params),
        check_kinetic_dirichlet(params),
        *check_golden_vs_analytic(params),
        *check_stationarity(params),
        check_crossover(params),
        check_peak_ratio(params),
        check_overlap_bound(params),
    ]
    return results
