"""Closed-form eigenvalues and eigenfunctions of the free harmonic oscillator."""
from __future__ import annotations

import math

import numpy as np

from .box_model import NATURAL_UNITS, PhysicalParams
from .box_model import check_quantum_number as _check_r
from .errors import DomainError

HERMITE_MAX_DEGREE = 170
# Gauss-Legendre order for integrals over the full norm window; 64 nodes
# under-resolve the r = 10 states across 24 length units.
EXACT_NORM_ORDER = 128


def exact_energy(r: int, params: PhysicalParams = NATURAL_UNITS) -> float:
    return (_check_r(r) + 0.5) * params.epsilon_omega


def hermite(n: int, y):
    """Physicists' Hermite polynomial H_n(y) by the three-term recurrence.

    Capped at degree 170; past that the values overflow doubles for moderate
    ``y``. Use :func:`exact_wavefunction` for normalized high-order states.
    """
    n = _check_r(n)
    if n > HERMITE_MAX_DEGREE:
        raise DomainError(f"hermite degree {n} exceeds the cap of {HERMITE_MAX_DEGREE}")
    y = np.asarray(y, dtype=float)
    h_prev = np.ones_like(y)
    if n == 0:
        return h_prev[()] if h_prev.ndim == 0 else h_prev
    h = 2.0 * y
    for k in range(1, n):
        h_prev, h = h, 2.0 * y * h - 2.0 * k * h_prev
    return h[()] if h.ndim == 0 else h


def exact_wavefunction(r: int, params: PhysicalParams = NATURAL_UNITS, x=0.0):
    """Normalized oscillator eigenfunction psi_r(x).

    Runs the recurrence on the normalized functions themselves,
    psi_{n+1} = sqrt(2/(n+1)) y psi_n - sqrt(n/(n+1)) psi_{n-1},  y = x sqrt(alpha),
    so 2^r r! is never formed.
    """
    r = _check_r(r)
    alpha = params.alpha
    y = np.asarray(x, dtype=float) * math.sqrt(alpha)
    psi_prev = (alpha / math.pi) ** 0.25 * np.exp(-0.5 * y * y)
    if r == 0:
        out = psi_prev
    else:
        psi = math.sqrt(2.0) * y * psi_prev
        for n in range(1, r):
            psi_prev, psi = psi, math.sqrt(2.0 / (n + 1)) * y * psi - math.sqrt(n / (n + 1)) * psi_prev
        out = psi
    return out[()] if out.ndim == 0 else out


def norm_window(params: PhysicalParams = NATURAL_UNITS) -> tuple[float, float]:
    """Interval outside which every low-lying eigenfunction is negligible."""
    w = 12.0 / math.sqrt(params.alpha)
    return -w, w
