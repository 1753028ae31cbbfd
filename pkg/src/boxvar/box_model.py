"""Particle-in-a-box eigenstates on [-L, L], used as the trial basis.

All functions accept scalar or array positions and broadcast with numpy.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

__all__ = [
    "PhysicalParams",
    "BoxState",
    "NATURAL_UNITS",
    "box_ground_scale",
    "box_energy",
    "box_wavefunction",
    "box_wavefunction_compact",
    "box_wavefunction_derivative",
    "check_quantum_number",
]


def check_quantum_number(r) -> int:
    if isinstance(r, bool) or int(r) != r or r < 0:
        raise DomainError(f"quantum number must be a non-negative integer, got {r!r}")
    return int(r)


@dataclass(frozen=True)
class PhysicalParams:
    """Mass, angular frequency and reduced Planck constant of the oscillator.

    ``alpha`` (inverse squared length) and ``epsilon_omega`` (energy quantum)
    are computed on access so they can never go stale.
    """

    mass: float = 1.0
    omega: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        for name in ("mass", "omega", "hbar"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise DomainError(f"{name} must be a positive finite number, got {value!r}")

    @property
    def alpha(self) -> float:
        return self.mass * self.omega / self.hbar

    @property
    def epsilon_omega(self) -> float:
        return self.hbar * self.omega


NATURAL_UNITS = PhysicalParams()


@dataclass(frozen=True)
class BoxState:
    """Quantum number ``r`` of a box eigenstate and the box half-width."""

    r: int
    half_width: float

    def __post_init__(self):
        object.__setattr__(self, "r", check_quantum_number(self.r))
        if not (math.isfinite(self.half_width) and self.half_width > 0):
            raise DomainError(f"half_width must be positive, got {self.half_width!r}")

    @property
    def parity(self) -> int:
        return -1 if self.r % 2 else 1

    @property
    def wavenumber(self) -> float:
        return (self.r + 1) * math.pi / (2.0 * self.half_width)


def box_ground_scale(L: float, params: PhysicalParams = NATURAL_UNITS) -> float:
    """Ground-state energy of a free particle confined to [-L, L]."""
    if not (L > 0):
        raise DomainError(f"box half-width must be positive, got {L!r}")
    return params.hbar**2 * math.pi**2 / (8.0 * params.mass * L**2)


def box_energy(state: BoxState, params: PhysicalParams = NATURAL_UNITS) -> float:
    return (state.r + 1) ** 2 * box_ground_scale(state.half_width, params)


def box_wavefunction(state: BoxState, x):
    """Normalized box eigenfunction, extended by zero outside the walls.

    Even ``r`` gives the cosine branch, odd ``r`` the sine branch.
    """
    x = np.asarray(x, dtype=float)
    L = state.half_width
    phase = state.wavenumber * x
    trig = np.sin(phase) if state.r % 2 else np.cos(phase)
    out = np.where(np.abs(x) <= L, trig / math.sqrt(L), 0.0)
    return out[()] if out.ndim == 0 else out


def box_wavefunction_compact(state: BoxState, x):
    # single-expression form; kept for equivalence testing only
    x = np.asarray(x, dtype=float)
    L = state.half_width
    shift = 0.5 * math.pi * math.sin(0.5 * state.r * math.pi) ** 2
    out = np.where(np.abs(x) <= L, np.cos(shift - state.wavenumber * x) / math.sqrt(L), 0.0)
    return out[()] if out.ndim == 0 else out


def box_wavefunction_derivative(state: BoxState, x):
    """Analytic d/dx of :func:`box_wavefunction` (zero outside the box)."""
    x = np.asarray(x, dtype=float)
    L = state.half_width
    k = state.wavenumber
    phase = k * x
    trig = k * np.cos(phase) if state.r % 2 else -k * np.sin(phase)
    out = np.where(np.abs(x) <= L, trig / math.sqrt(L), 0.0)
    return out[()] if out.ndim == 0 else out
