"""Variational solution with the box ground scale as the free parameter.

For the r-th box state the oscillator energy is ``A eps + B / eps`` with
``A = (r+1)^2`` and ``B = eps_w^2 / 8 (pi^2/6 - 1/(r+1)^2)``, so the optimum
sits at ``eps* = sqrt(B / A)`` and the optimal box half-width follows from
``eps* = hbar^2 pi^2 / (8 m L*^2)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .box_model import NATURAL_UNITS, BoxState, PhysicalParams, box_wavefunction
from .box_model import check_quantum_number as _check_r
from .errors import DomainError
from .numerics import MinimizationResult, minimize_golden

__all__ = [
    "EnergyCoefficients",
    "VariationalSolution",
    "energy_functional",
    "coefficients",
    "gamma",
    "solve",
    "solve_golden",
    "minimize_functional",
    "golden_bracket",
    "half_width_from_scale",
    "optimized_wavefunction",
]

ASYMPTOTIC_RATIO = math.pi / math.sqrt(12.0)


@dataclass(frozen=True)
class EnergyCoefficients:
    a_r: float
    b_r: float

    def __call__(self, epsilon: float) -> float:
        return self.a_r * epsilon + self.b_r / epsilon


@dataclass(frozen=True)
class VariationalSolution:
    r: int
    gamma: float
    epsilon_star: float
    l_star: float
    e_star: float


def energy_functional(r: int, epsilon: float, params: PhysicalParams = NATURAL_UNITS) -> float:
    """Energy of the r-th box state as a function of the box ground scale."""
    r = _check_r(r)
    if not epsilon > 0:
        raise DomainError(f"epsilon must be positive, got {epsilon!r}")
    n2 = (r + 1) ** 2
    ew = params.epsilon_omega
    return n2 * epsilon + (ew * ew / 8.0) * (math.pi**2 / 6.0 - 1.0 / n2) / epsilon


def coefficients(r: int, params: PhysicalParams = NATURAL_UNITS) -> EnergyCoefficients:
    r = _check_r(r)
    n2 = (r + 1) ** 2
    ew = params.epsilon_omega
    return EnergyCoefficients(a_r=float(n2), b_r=(ew * ew / 8.0) * (math.pi**2 / 6.0 - 1.0 / n2))


def gamma(r: int) -> float:
    """Optimal box ground scale in units of the oscillator quantum."""
    r = _check_r(r)
    n2 = (r + 1) ** 2
    return math.sqrt((math.pi**2 * n2 - 6.0) / (48.0 * n2 * n2))


def half_width_from_scale(epsilon: float, params: PhysicalParams = NATURAL_UNITS) -> float:
    """Invert ``eps = hbar^2 pi^2 / (8 m L^2)`` for L."""
    if not epsilon > 0:
        raise DomainError(f"epsilon must be positive, got {epsilon!r}")
    return params.hbar * math.pi / math.sqrt(8.0 * params.mass * epsilon)


def solve(r: int, params: PhysicalParams = NATURAL_UNITS) -> VariationalSolution:
    r = _check_r(r)
    g = gamma(r)
    n2 = (r + 1) ** 2
    ew = params.epsilon_omega
    e_star = ew * math.sqrt((math.pi**2 * n2 - 6.0) / 12.0)
    l_star = 1.0 / math.sqrt(8.0 * params.alpha * g / math.pi**2)
    return VariationalSolution(r=r, gamma=g, epsilon_star=g * ew, l_star=l_star, e_star=e_star)


def golden_bracket(r: int, params: PhysicalParams = NATURAL_UNITS, seeded: bool = False) -> tuple[float, float]:
    ew = params.epsilon_omega
    if seeded:
        center = gamma(r) * ew
        return center / 100.0, center * 100.0
    return 1e-3 * ew, 1e3 * ew


def minimize_functional(
    r: int,
    params: PhysicalParams = NATURAL_UNITS,
    bracket: tuple[float, float] | None = None,
    rel_tol: float = 1e-10,
    max_iter: int = 200,
    exact: bool = True,
) -> MinimizationResult:
    """Golden-section minimization of :func:`energy_functional` over epsilon.

    With ``exact=True`` the functional is evaluated in rational arithmetic on
    the (float) coefficients. Float evaluation carries rounding noise of about
    one ulp, which caps any value-comparing search at roughly sqrt(machine
    epsilon) ~ 1e-8 relative accuracy in the minimizer.
    """
    r = _check_r(r)
    lo, hi = bracket or golden_bracket(r, params)
    if exact:
        coef = coefficients(r, params)
        a, b = Fraction(coef.a_r), Fraction(coef.b_r)

        def f(eps):
            e = Fraction(eps)
            return a * e + b / e
    else:
        def f(eps):
            return energy_functional(r, eps, params)

    res = minimize_golden(f, lo, hi, rel_tol, max_iter)
    return MinimizationResult(float(res.x_min), float(res.f_min), res.iterations, res.converged)


def solve_golden(r: int, params: PhysicalParams = NATURAL_UNITS, **kwargs) -> VariationalSolution:
    """Same as :func:`solve`, but with the optimum located numerically."""
    res = minimize_functional(r, params, **kwargs)
    if not res.converged:
        raise ArithmeticError(f"golden-section search did not converge for r={r}")
    eps = res.x_min
    return VariationalSolution(
        r=_check_r(r),
        gamma=eps / params.epsilon_omega,
        epsilon_star=eps,
        l_star=half_width_from_scale(eps, params),
        e_star=res.f_min,
    )


def optimized_wavefunction(r: int, params: PhysicalParams = NATURAL_UNITS, x=0.0):
    """Box state r at the optimal half-width; zero outside [-L*, L*]."""
    sol = solve(r, params)
    return box_wavefunction(BoxState(sol.r, sol.l_star), x)
