"""Quadrature and scalar minimization used to cross-check the closed forms."""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .box_model import (
    NATURAL_UNITS,
    BoxState,
    PhysicalParams,
    box_wavefunction,
    box_wavefunction_derivative,
)
from .errors import DomainError

MAX_ORDER = 10000
DEFAULT_ORDER = 64
NEWTON_MAX_ITER = 100
NEWTON_TOL = 1e-15

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
INV_PHI2 = 1.0 - INV_PHI


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss-Legendre nodes and weights on (-1, 1). Arrays are read-only."""

    nodes: np.ndarray
    weights: np.ndarray
    order: int


@dataclass(frozen=True)
class MinimizationResult:
    x_min: float
    f_min: float
    iterations: int
    converged: bool


def default_order(r: int) -> int:
    """Quadrature order that resolves the r-th box state's oscillations."""
    return max(DEFAULT_ORDER, 8 * (r + 1))


def _legendre_with_derivative(n, x):
    p_prev = np.ones_like(x)
    p = x.copy()
    for k in range(1, n):
        p_prev, p = p, ((2 * k + 1) * x * p - k * p_prev) / (k + 1)
    dp = n * (x * p - p_prev) / (x * x - 1.0)
    return p, dp


@functools.lru_cache(maxsize=64)
def gauss_legendre(order: int) -> QuadratureRule:
    """Gauss-Legendre rule of the given order.

    Roots of P_n are found by Newton iteration on the three-term recurrence,
    started from the asymptotic guess cos(pi (i - 1/4) / (n + 1/2)).
    """
    if isinstance(order, bool) or int(order) != order or not 1 <= order <= MAX_ORDER:
        raise DomainError(f"quadrature order must be an integer in [1, {MAX_ORDER}], got {order!r}")
    n = int(order)
    # only the non-negative half is solved; the rest follows by symmetry
    m = (n + 1) // 2
    i = np.arange(1, m + 1)
    x = np.cos(math.pi * (i - 0.25) / (n + 0.5))
    for _ in range(NEWTON_MAX_ITER):
        p, dp = _legendre_with_derivative(n, x)
        step = p / dp
        x = x - step
        if np.max(np.abs(step)) <= NEWTON_TOL:
            break
    p, dp = _legendre_with_derivative(n, x)
    w = 2.0 / ((1.0 - x * x) * dp * dp)

    if n % 2:
        x[-1] = 0.0
        nodes = np.concatenate([-x, x[-2::-1]])
        weights = np.concatenate([w, w[-2::-1]])
    else:
        nodes = np.concatenate([-x, x[::-1]])
        weights = np.concatenate([w, w[::-1]])
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return QuadratureRule(nodes=nodes, weights=weights, order=n)


def integrate(f: Callable, a: float, b: float, rule: QuadratureRule) -> float:
    """Integrate a vectorized ``f`` over [a, b] with ``rule``."""
    if not a < b:
        raise DomainError(f"integration bounds must satisfy a < b, got [{a}, {b}]")
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    x = mid + half * rule.nodes
    fx = np.broadcast_to(np.asarray(f(x), dtype=float), x.shape)
    return float(half * np.dot(rule.weights, fx))


def overlap(f: Callable, g: Callable, a: float, b: float, order: int = DEFAULT_ORDER) -> float:
    rule = gauss_legendre(order)
    return integrate(lambda x: f(x) * g(x), a, b, rule)


def kinetic_energy(state: BoxState, params: PhysicalParams = NATURAL_UNITS, order: int | None = None) -> float:
    """(hbar^2 / 2m) times the integral of the squared derivative over the box."""
    rule = gauss_legendre(order or default_order(state.r))
    L = state.half_width
    integral = integrate(lambda x: box_wavefunction_derivative(state, x) ** 2, -L, L, rule)
    return params.hbar**2 / (2.0 * params.mass) * integral


def potential_energy(state: BoxState, params: PhysicalParams = NATURAL_UNITS, order: int | None = None) -> float:
    rule = gauss_legendre(order or default_order(state.r))
    L = state.half_width
    integral = integrate(lambda x: x * x * box_wavefunction(state, x) ** 2, -L, L, rule)
    return 0.5 * params.mass * params.omega**2 * integral


def expectation_energy(state: BoxState, params: PhysicalParams = NATURAL_UNITS, order: int | None = None) -> float:
    """Energy expectation of the confined oscillator in a box state, by quadrature.

    Kinetic energy uses the first-derivative form, which equals the usual
    second-derivative form because the state vanishes at the walls.
    """
    return kinetic_energy(state, params, order) + potential_energy(state, params, order)


def minimize_golden(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    rel_tol: float = 1e-10,
    max_iter: int = 200,
    abs_tol: float = 0.0,
) -> MinimizationResult:
    """Golden-section search for the minimum of a unimodal ``f`` on [lo, hi].

    Stops once the bracket width is at most ``rel_tol * |x| + abs_tol``, with
    ``x`` the bracket midpoint. If ``max_iter`` runs out first the best point
    seen so far is returned with ``converged=False``.
    """
    if not lo < hi:
        raise DomainError(f"bracket must satisfy lo < hi, got [{lo}, {hi}]")
    if not rel_tol > 0:
        raise DomainError(f"rel_tol must be positive, got {rel_tol!r}")

    a, b = float(lo), float(hi)
    c = a + INV_PHI2 * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)

    iterations = 0
    converged = False
    while True:
        mid = 0.5 * (a + b)
        if b - a <= rel_tol * abs(mid) + abs_tol:
            converged = True
            break
        if iterations >= max_iter:
            break
        iterations += 1
        if fc < fd:
            b, d, fd = d, c, fc
            c = a + INV_PHI2 * (b - a)
            fc = f(c)
        elif fc == fd:
            # unimodal f: equal values pin the minimizer inside [c, d]
            a, b = c, d
            c = a + INV_PHI2 * (b - a)
            d = a + INV_PHI * (b - a)
            fc, fd = f(c), f(d)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)

    x_min, f_min = (c, fc) if fc < fd else (d, fd)
    return MinimizationResult(x_min=x_min, f_min=f_min, iterations=iterations, converged=converged)
