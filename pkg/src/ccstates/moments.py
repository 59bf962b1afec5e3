"""Closed-form second moments and uncertainty relations of CCS.

All quantities are for a unit-mass oscillator.  For the alpha-state

    var_q = hbar / (2 gamma cos alpha)
    var_p = gamma**2 var_q
    <dp dq> = -(hbar/2) tan(alpha) - i hbar/2

so ``|<dp dq>| = (hbar/2) / cos(alpha) = sqrt(var_q var_p)`` and the
Schroedinger relation holds with equality for every alpha.  The thermal
functions take a :class:`~ccstates.states.ThermalSpec` and use
``coth(hbar omega / 2 k_B T)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ParameterOverflow
from .states import X_SATURATION, AlphaState, ThermalSpec, base_variance, thermal_argument

#: Largest phase for which the sec(alpha) quantities are evaluated.
ALPHA_LIMIT = 0.5 * math.pi - 1e-6


@dataclass(frozen=True)
class MomentSet:
    var_q: float
    var_p: float
    cov_pq: float
    correlator_mag: float
    uncertainty_product: float


@dataclass(frozen=True)
class UncertaintyReport:
    sur_lhs: float
    sur_rhs: float
    saturation_defect: float
    heisenberg_bound: float
    effective_action: float


@dataclass(frozen=True)
class PhaseSquare:
    """Uncertainty square in the dimensionless (Q, P) plane.

    ``side_Q`` and ``side_P`` are the dimensionless standard deviations.
    ``area`` is ``side_Q * side_P / 2``, which is 1/4 for the cold vacuum.
    """

    side_P: float
    side_Q: float
    area: float


def _cos_alpha(state: AlphaState) -> float:
    if state.alpha > ALPHA_LIMIT:
        raise ParameterOverflow(f"alpha={state.alpha!r} exceeds pi/2 - 1e-6")
    return math.cos(state.alpha)


def variance_q(state: AlphaState) -> float:
    return base_variance(state) / _cos_alpha(state)


def variance_p(state: AlphaState) -> float:
    return state.gamma**2 * variance_q(state)


def covariance(state: AlphaState) -> float:
    """Symmetrized covariance ``Re <dp dq>``; negative for alpha > 0."""
    _cos_alpha(state)
    if state.alpha == 0:
        return 0.0
    return -0.5 * state.constants.hbar * math.tan(state.alpha)


def correlator_magnitude(state: AlphaState) -> float:
    return 0.5 * state.constants.hbar / _cos_alpha(state)


def effective_action(state: AlphaState) -> float:
    """Thermostat action ``sqrt((hbar tan(alpha) / 2)**2 + J0**2)`` with ``J0 = hbar/2``."""
    _cos_alpha(state)
    half_hbar = 0.5 * state.constants.hbar
    return math.hypot(half_hbar * math.tan(state.alpha), half_hbar)


def moment_set(state: AlphaState) -> MomentSet:
    vq = variance_q(state)
    vp = variance_p(state)
    return MomentSet(
        var_q=vq,
        var_p=vp,
        cov_pq=covariance(state),
        correlator_mag=correlator_magnitude(state),
        uncertainty_product=vq * vp,
    )


def sur_report(state: AlphaState) -> UncertaintyReport:
    lhs = math.sqrt(variance_q(state) * variance_p(state))
    rhs = correlator_magnitude(state)
    return UncertaintyReport(
        sur_lhs=lhs,
        sur_rhs=rhs,
        saturation_defect=(lhs - rhs) / rhs,
        heisenberg_bound=0.5 * state.constants.hbar,
        effective_action=effective_action(state),
    )


# ----------------------------------------------------------------------------
# thermal equilibrium

def _coth(spec: ThermalSpec) -> float:
    x = thermal_argument(spec)
    if x >= X_SATURATION:
        return 1.0
    return 1.0 / math.tanh(x)


def planck_energy(spec: ThermalSpec) -> float:
    """Mean oscillator energy ``(hbar omega / 2) coth(x)``; ``hbar omega / 2`` at T = 0."""
    return 0.5 * spec.constants.hbar * spec.omega * _coth(spec)


def mean_kinetic_potential(spec: ThermalSpec) -> tuple[float, float]:
    half = 0.5 * planck_energy(spec)
    return half, half


def thermal_variances(spec: ThermalSpec) -> tuple[float, float]:
    """``(var_q, var_p)`` at temperature T from equipartition of the Planck energy."""
    coth = _coth(spec)
    hbar = spec.constants.hbar
    return 0.5 * hbar / spec.omega * coth, 0.5 * hbar * spec.omega * coth


def phase_plane_square(spec: ThermalSpec) -> PhaseSquare:
    # Q = q sqrt(omega/hbar), P = p / sqrt(hbar omega): both variances are coth(x)/2
    coth = _coth(spec)
    side = math.sqrt(0.5 * coth)
    return PhaseSquare(side_P=side, side_Q=side, area=0.25 * coth)
