"""Correlated coherent states of a quantum oscillator.

Closed-form wavefunctions, moments and uncertainty relations in the phase,
Bogoliubov and temperature parametrizations, plus numerical oracles that
check them.
"""
from .errors import (
    ColdVacuumLimit,
    DegenerateTemperature,
    GridTooCoarse,
    NonConvergence,
    ParameterOverflow,
)
from .moments import (
    MomentSet,
    PhaseSquare,
    UncertaintyReport,
    correlator_magnitude,
    covariance,
    effective_action,
    mean_kinetic_potential,
    moment_set,
    phase_plane_square,
    planck_energy,
    sur_report,
    thermal_variances,
    variance_p,
    variance_q,
)
from .oracle import (
    GridWavefunction,
    QuadratureConfig,
    annihilation_residual,
    momentum_distribution,
    quad_correlator,
    quad_norm,
    quad_variance_p,
    quad_variance_q,
    sample_grid,
)
from .states import (
    AlphaState,
    BogoliubovState,
    Constants,
    GaussianForm,
    ThermalSpec,
    WaveSample,
    alpha_from_tau,
    alpha_from_temperature,
    base_variance,
    bogoliubov_uv,
    from_bogoliubov,
    from_thermal,
    gaussian_form,
    psi_alpha,
    psi_tau_phi,
    psi_thermal,
    tau_from_alpha,
    temperature_from_alpha,
    to_bogoliubov,
    to_thermal,
)

__version__ = "0.1.0"
