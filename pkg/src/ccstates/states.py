"""Wavefunctions of correlated coherent states in three parametrizations.

A correlated coherent state (CCS) of a unit-mass oscillator is a complex
Gaussian ``psi(q) = N exp(-c q**2)`` with ``Re c > 0``.  It can be labelled by

* a phase ``alpha`` and a stiffness ``gamma`` (:class:`AlphaState`),
* Bogoliubov parameters ``(tau, phi)`` and a frequency ``omega``
  (:class:`BogoliubovState`),
* a temperature ``T`` and a frequency ``omega`` (:class:`ThermalSpec`).

With ``gamma == omega``, ``phi == pi/4`` and ``tan(alpha) == sinh(2 tau)``
all three describe the same state, and ``1/cos(alpha) == coth(x)`` with
``x = hbar omega / (2 k_B T)`` ties the phase to the temperature.

The exponent is always written ``-q**2 (1 + i beta) / (4 sigma**2)`` with
``beta = tan(alpha) >= 0``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ColdVacuumLimit, DegenerateTemperature, ParameterOverflow

HALF_PI = 0.5 * math.pi
#: Beyond this thermal argument tanh and coth equal 1 to double precision.
X_SATURATION = 20.0
#: Largest tau for which cosh(2 tau) is finite in double precision.
TAU_MAX = 0.5 * math.asinh(np.finfo(float).max)


@dataclass(frozen=True)
class Constants:
    """Physical constants; the mass is fixed to 1."""

    hbar: float = 1.0
    k_B: float = 1.0

    def __post_init__(self):
        for name in ("hbar", "k_B"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise ValueError(f"{name} must be a positive finite number, got {value!r}")

    @property
    def mass(self) -> float:
        return 1.0


DEFAULT_CONSTANTS = Constants()


def _check_positive(name, value):
    if not (math.isfinite(value) and value > 0):
        raise ValueError(f"{name} must be a positive finite number, got {value!r}")


@dataclass(frozen=True)
class AlphaState:
    """CCS labelled by its phase ``alpha`` in [0, pi/2) and stiffness ``gamma``."""

    alpha: float
    gamma: float = 1.0
    constants: Constants = field(default=DEFAULT_CONSTANTS)

    def __post_init__(self):
        if not (math.isfinite(self.alpha) and 0.0 <= self.alpha < HALF_PI):
            raise ValueError(f"alpha must lie in [0, pi/2), got {self.alpha!r}")
        _check_positive("gamma", self.gamma)


@dataclass(frozen=True)
class BogoliubovState:
    """CCS labelled by the Bogoliubov squeezing ``tau`` and angle ``phi``."""

    tau: float
    phi: float = 0.25 * math.pi
    omega: float = 1.0
    constants: Constants = field(default=DEFAULT_CONSTANTS)

    def __post_init__(self):
        if not (math.isfinite(self.tau) and self.tau >= 0):
            raise ValueError(f"tau must be a finite number >= 0, got {self.tau!r}")
        if not math.isfinite(self.phi):
            raise ValueError(f"phi must be finite, got {self.phi!r}")
        _check_positive("omega", self.omega)


@dataclass(frozen=True)
class ThermalSpec:
    """Equilibrium at temperature ``temperature`` for an oscillator of frequency ``omega``."""

    temperature: float
    omega: float = 1.0
    constants: Constants = field(default=DEFAULT_CONSTANTS)

    def __post_init__(self):
        if not (math.isfinite(self.temperature) and self.temperature >= 0):
            raise ValueError(f"temperature must be a finite number >= 0, got {self.temperature!r}")
        _check_positive("omega", self.omega)


@dataclass(frozen=True)
class WaveSample:
    q: float
    amplitude: complex


@dataclass(frozen=True)
class GaussianForm:
    """``psi(q) = prefactor * exp(-coefficient * q**2)``.

    Common currency between the parametrizations; the oracles integrate
    against it without knowing which constructor produced it.
    """

    prefactor: float
    coefficient: complex
    hbar: float = 1.0

    def __call__(self, q):
        q = np.asarray(q, dtype=float)
        return self.prefactor * np.exp(-self.coefficient * q * q)

    def derivative(self, q):
        """Exact ``d psi / dq``."""
        q = np.asarray(q, dtype=float)
        return -2.0 * self.coefficient * q * self(q)

    @property
    def sigma(self) -> float:
        """Coordinate standard deviation of ``|psi|**2``."""
        return math.sqrt(0.25 / self.coefficient.real)

    def scaled(self, factor: float) -> GaussianForm:
        return GaussianForm(self.prefactor * factor, self.coefficient, self.hbar)


def _as_coordinate(q):
    arr = np.asarray(q, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError("q must be finite")
    return arr


def _evaluate(form: GaussianForm, q):
    arr = _as_coordinate(q)
    out = form(arr)
    return complex(out) if arr.ndim == 0 else out


def _csch(x: float) -> float:
    # 1/sinh(x) without overflow for large x
    return 2.0 * math.exp(-x) / -math.expm1(-2.0 * x)


def _require_matching(gamma: float, omega: float):
    if not math.isclose(gamma, omega, rel_tol=1e-12):
        raise ValueError(
            f"mixing parametrizations needs gamma == omega, got gamma={gamma!r}, omega={omega!r}"
        )


# ----------------------------------------------------------------------------
# alpha parametrization

def base_variance(state: AlphaState) -> float:
    """Cold-vacuum coordinate variance ``hbar / (2 gamma)``."""
    return state.constants.hbar / (2.0 * state.gamma)


def alpha_form(state: AlphaState) -> GaussianForm:
    s0 = base_variance(state)
    cos_a = math.cos(state.alpha)
    prefactor = (2.0 * math.pi * s0 / cos_a) ** -0.25
    return GaussianForm(prefactor, cmath.exp(1j * state.alpha) / (4.0 * s0), state.constants.hbar)


def psi_alpha(state: AlphaState, q):
    """Evaluate ``psi_alpha(q)``; ``q`` may be a scalar or an array."""
    return _evaluate(alpha_form(state), q)


# ----------------------------------------------------------------------------
# Bogoliubov (tau, phi) parametrization

def _check_tau(tau: float):
    if tau > TAU_MAX:
        raise ParameterOverflow(f"cosh(2 tau) overflows for tau={tau!r} (max {TAU_MAX:.6g})")


def bogoliubov_uv(state: BogoliubovState) -> tuple[complex, complex]:
    """Return ``(u, v) = (cosh tau e^{i phi}, sinh tau e^{-i phi})``."""
    _check_tau(state.tau)
    u = math.cosh(state.tau) * cmath.exp(1j * state.phi)
    v = math.sinh(state.tau) * cmath.exp(-1j * state.phi)
    return u, v


def bogoliubov_variance(state: BogoliubovState) -> float:
    """Coordinate variance of ``psi_tau_phi``.

    Equals ``(Delta q_0)**2 * |u + v|**2``, evaluated as
    ``e^{2 tau} cos^2 phi + e^{-2 tau} sin^2 phi`` to avoid cancellation.
    """
    _check_tau(state.tau)
    s0 = state.constants.hbar / (2.0 * state.omega)
    c, s = math.cos(state.phi), math.sin(state.phi)
    return s0 * (math.exp(2.0 * state.tau) * c * c + math.exp(-2.0 * state.tau) * s * s)


def bogoliubov_beta(state: BogoliubovState) -> float:
    _check_tau(state.tau)
    return math.sinh(2.0 * state.tau) * math.sin(2.0 * state.phi)


def bogoliubov_form(state: BogoliubovState, beta_shift: float = 0.0) -> GaussianForm:
    """Normalized Gaussian of the Bogoliubov vacuum.

    ``beta_shift`` offsets the phase parameter; it exists so that oracles can
    build deliberately wrong states.
    """
    var = bogoliubov_variance(state)
    beta = bogoliubov_beta(state) + beta_shift
    prefactor = (2.0 * math.pi * var) ** -0.25
    return GaussianForm(prefactor, complex(1.0, beta) / (4.0 * var), state.constants.hbar)


def psi_tau_phi(state: BogoliubovState, q):
    return _evaluate(bogoliubov_form(state), q)


# ----------------------------------------------------------------------------
# temperature parametrization

def thermal_argument(spec: ThermalSpec) -> float:
    """``x = hbar omega / (2 k_B T)``; ``inf`` at ``T = 0``."""
    if spec.temperature == 0:
        return math.inf
    return spec.constants.hbar * spec.omega / (2.0 * spec.constants.k_B * spec.temperature)


def thermal_form(spec: ThermalSpec) -> GaussianForm:
    if spec.temperature == 0:
        raise DegenerateTemperature("T = 0 is the cold vacuum; build AlphaState(alpha=0) instead")
    x = thermal_argument(spec)
    s0 = spec.constants.hbar / (2.0 * spec.omega)
    if x >= X_SATURATION:
        tanh_x = coth_x = 1.0
    else:
        tanh_x = math.tanh(x)
        coth_x = 1.0 / tanh_x
    prefactor = (2.0 * math.pi * s0 * coth_x) ** -0.25
    coefficient = tanh_x * complex(1.0, _csch(x)) / (4.0 * s0)
    return GaussianForm(prefactor, coefficient, spec.constants.hbar)


def psi_thermal(spec: ThermalSpec, q):
    """``psi_T(q)``, the alpha-state written with explicit temperature dependence."""
    return _evaluate(thermal_form(spec), q)


def alpha_from_temperature(spec: ThermalSpec) -> float:
    """Phase with ``1/cos(alpha) = coth(x)``; exactly 0 at ``T = 0``.

    Uses ``alpha = atan(1/sinh x)`` so low temperatures keep full relative
    precision (``tanh x`` rounds to 1 for x > 19).  Below ``T ~ hbar omega /
    (1490 k_B)`` the phase underflows and 0 is returned.
    """
    if spec.temperature == 0:
        return 0.0
    alpha = math.atan(_csch(thermal_argument(spec)))
    if alpha >= HALF_PI:
        raise ParameterOverflow(f"temperature {spec.temperature!r} maps to alpha = pi/2 in double precision")
    return alpha


def temperature_from_alpha(state: AlphaState, omega: float | None = None) -> float:
    """Inverse of :func:`alpha_from_temperature`, with ``omega`` bound to ``gamma``."""
    if omega is None:
        omega = state.gamma
    _require_matching(state.gamma, omega)
    if state.alpha == 0:
        raise ColdVacuumLimit("alpha = 0 corresponds to T = 0 exactly")
    x = math.asinh(math.cos(state.alpha) / math.sin(state.alpha))
    return state.constants.hbar * omega / (2.0 * state.constants.k_B * x)


def tau_from_alpha(alpha: float) -> float:
    """Squeezing ``tau`` with ``sinh(2 tau) == tan(alpha)``."""
    if not (0.0 <= alpha < HALF_PI):
        raise ValueError(f"alpha must lie in [0, pi/2), got {alpha!r}")
    return 0.5 * math.asinh(math.tan(alpha))


def alpha_from_tau(tau: float) -> float:
    if tau < 0:
        raise ValueError(f"tau must be >= 0, got {tau!r}")
    return math.atan(math.sinh(2.0 * tau))


# ----------------------------------------------------------------------------
# conversions between parametrizations

def to_bogoliubov(state: AlphaState) -> BogoliubovState:
    return BogoliubovState(tau_from_alpha(state.alpha), 0.25 * math.pi, state.gamma, state.constants)


def to_thermal(state: AlphaState) -> ThermalSpec:
    if state.alpha == 0:
        return ThermalSpec(0.0, state.gamma, state.constants)
    return ThermalSpec(temperature_from_alpha(state), state.gamma, state.constants)


def from_thermal(spec: ThermalSpec) -> AlphaState:
    return AlphaState(alpha_from_temperature(spec), spec.omega, spec.constants)


def from_bogoliubov(state: BogoliubovState) -> AlphaState:
    """Alpha-state equivalent of a CCS; only defined on the ``phi = pi/4`` line."""
    if not math.isclose(state.phi, 0.25 * math.pi, rel_tol=0, abs_tol=1e-12):
        raise ValueError("only phi = pi/4 Bogoliubov vacua are correlated coherent states")
    return AlphaState(alpha_from_tau(state.tau), state.omega, state.constants)


def gaussian_form(state) -> GaussianForm:
    """Gaussian representation of any supported state object."""
    if isinstance(state, GaussianForm):
        return state
    if isinstance(state, AlphaState):
        return alpha_form(state)
    if isinstance(state, BogoliubovState):
        return bogoliubov_form(state)
    if isinstance(state, ThermalSpec):
        if state.temperature == 0:
            return alpha_form(from_thermal(state))
        return thermal_form(state)
    raise TypeError(f"unsupported state type {type(state).__name__}")


def sample(state, q) -> list[WaveSample]:
    form = gaussian_form(state)
    qs = np.atleast_1d(_as_coordinate(q))
    return [WaveSample(float(x), complex(a)) for x, a in zip(qs, form(qs))]
