"""Variational quantization of the 1-D harmonic oscillator with particle-in-a-box trial states."""
from .box_model import NATURAL_UNITS, BoxState, PhysicalParams, box_energy, box_ground_scale, box_wavefunction
from .errors import DomainError, EmitError
from .exact_ho import exact_energy, exact_wavefunction, hermite
from .numerics import (
    MinimizationResult,
    QuadratureRule,
    expectation_energy,
    gauss_legendre,
    integrate,
    minimize_golden,
    overlap,
)
from .report import (
    EnergyComparisonRow,
    WavefunctionTrace,
    emit_csv,
    emit_plot,
    energy_table,
    overlap_diagnostics,
    peak_ratio,
    wavefunction_traces,
)
from .variational import (
    EnergyCoefficients,
    VariationalSolution,
    coefficients,
    energy_functional,
    gamma,
    optimized_wavefunction,
    solve,
    solve_golden,
)

__version__ = "0.1.0"
