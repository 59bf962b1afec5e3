"""Numerical oracles for the closed forms.

Everything here works from wavefunction values only: moments come from
composite Simpson quadrature on successively doubled grids, the momentum
distribution from a discrete Fourier transform, and the annihilation
condition from finite differences.  None of it calls into
:mod:`ccstates.moments`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import simpson

from .errors import GridTooCoarse, NonConvergence
from .states import BogoliubovState, GaussianForm, bogoliubov_form, bogoliubov_uv, gaussian_form


@dataclass(frozen=True)
class QuadratureConfig:
    half_width_sigmas: float = 10.0
    initial_points: int = 2049
    rel_tolerance: float = 1e-10
    max_refinements: int = 12

    def __post_init__(self):
        if not self.half_width_sigmas >= 6:
            raise ValueError("half_width_sigmas must be >= 6")
        n = self.initial_points - 1
        if n < 2 or n & (n - 1):
            raise ValueError("initial_points must be a power of two plus one (>= 3)")
        if not self.rel_tolerance > np.finfo(float).eps:
            raise ValueError("rel_tolerance must exceed machine epsilon")
        if self.max_refinements < 1:
            raise ValueError("max_refinements must be >= 1")


DEFAULT_CONFIG = QuadratureConfig()


def _grid(form: GaussianForm, half_width_sigmas: float, points: int):
    half = half_width_sigmas * form.sigma
    return np.linspace(-half, half, points)


def integrate(integrand, form: GaussianForm, cfg: QuadratureConfig | None = None):
    """Integrate ``integrand(q)`` over ``[-w, w]``, ``w = half_width_sigmas * sigma``.

    The composite Simpson rule is evaluated on ``initial_points`` nodes and
    then on grids with half the step until two successive values agree to
    ``rel_tolerance``.  Returns the finer of the two.
    """
    cfg = cfg or DEFAULT_CONFIG
    points = cfg.initial_points
    q = _grid(form, cfg.half_width_sigmas, points)
    previous = simpson(integrand(q), x=q)
    for _ in range(cfg.max_refinements):
        points = 2 * points - 1
        q = _grid(form, cfg.half_width_sigmas, points)
        current = simpson(integrand(q), x=q)
        if abs(current - previous) <= cfg.rel_tolerance * abs(current):
            return current
        previous = current
    raise NonConvergence(
        f"no convergence to rel. tolerance {cfg.rel_tolerance:g} after "
        f"{cfg.max_refinements} refinements (last change {abs(current - previous):.3g})"
    )


def quad_norm(state, cfg: QuadratureConfig | None = None) -> float:
    form = gaussian_form(state)
    return float(integrate(lambda q: np.abs(form(q)) ** 2, form, cfg))


def quad_variance_q(state, cfg: QuadratureConfig | None = None) -> float:
    form = gaussian_form(state)
    return float(integrate(lambda q: q * q * np.abs(form(q)) ** 2, form, cfg))


def quad_variance_p(state, cfg: QuadratureConfig | None = None) -> float:
    """``hbar**2 * int |dpsi/dq|**2 dq``; the mean momentum of these states is zero."""
    form = gaussian_form(state)
    return form.hbar**2 * float(integrate(lambda q: np.abs(form.derivative(q)) ** 2, form, cfg))


def quad_correlator(state, cfg: QuadratureConfig | None = None) -> complex:
    """``<psi| p q |psi> = int psi* (-i hbar) d/dq (q psi) dq``."""
    form = gaussian_form(state)

    def integrand(q):
        psi = form(q)
        return np.conj(psi) * (-1j * form.hbar) * (psi + q * form.derivative(q))

    return complex(integrate(integrand, form, cfg))


# ----------------------------------------------------------------------------
# grid wavefunctions and the momentum representation

@dataclass(frozen=True, eq=False)
class GridWavefunction:
    """Wavefunction sampled on a uniform grid symmetric about 0 (odd length)."""

    q_values: np.ndarray
    amplitudes: np.ndarray
    spacing: float
    hbar: float = 1.0

    def __post_init__(self):
        q = np.asarray(self.q_values, dtype=float)
        psi = np.asarray(self.amplitudes, dtype=complex)
        object.__setattr__(self, "q_values", q)
        object.__setattr__(self, "amplitudes", psi)
        if q.ndim != 1 or q.shape != psi.shape or q.size % 2 == 0:
            raise ValueError("grid must be one-dimensional with an odd number of points")
        if not self.spacing > 0:
            raise ValueError("spacing must be positive")
        scale = np.max(np.abs(q))
        if not np.allclose(np.diff(q), self.spacing, rtol=1e-9, atol=0):
            raise ValueError("grid is not uniform with the given spacing")
        if not np.allclose(q + q[::-1], 0.0, rtol=0, atol=1e-12 * scale):
            raise ValueError("grid is not symmetric about 0")
        norm = self.norm()
        if abs(norm - 1.0) > 1e-6:
            raise ValueError(f"discrete normalization {norm!r} is not within 1e-6 of 1")

    @property
    def density(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def norm(self) -> float:
        return float(np.sum(self.density) * self.spacing)

    def mean(self) -> float:
        return float(np.sum(self.q_values * self.density) * self.spacing)

    def variance(self) -> float:
        mu = self.mean()
        return float(np.sum((self.q_values - mu) ** 2 * self.density) * self.spacing)


def sample_grid(state, cfg: QuadratureConfig | None = None) -> GridWavefunction:
    cfg = cfg or DEFAULT_CONFIG
    form = gaussian_form(state)
    q = _grid(form, cfg.half_width_sigmas, cfg.initial_points)
    return GridWavefunction(q, form(q), q[1] - q[0], form.hbar)


def momentum_distribution(gridpsi: GridWavefunction) -> GridWavefunction:
    """Momentum-space wavefunction on the conjugate grid (spacing ``2 pi hbar / (N dq)``).

    ``psi(p) = (2 pi hbar)**-1/2 sum_j psi(q_j) exp(-i p q_j / hbar) dq``.
    """
    n = gridpsi.q_values.size
    dq, hbar = gridpsi.spacing, gridpsi.hbar
    p = 2.0 * math.pi * hbar * np.fft.fftfreq(n, d=dq)
    phi = np.fft.fft(gridpsi.amplitudes) * np.exp(-1j * p * gridpsi.q_values[0] / hbar)
    phi *= dq / math.sqrt(2.0 * math.pi * hbar)
    p, phi = np.fft.fftshift(p), np.fft.fftshift(phi)
    dp = 2.0 * math.pi * hbar / (n * dq)

    density = np.abs(phi) ** 2
    mean = np.sum(p * density) * dp
    sigma_p = math.sqrt(np.sum((p - mean) ** 2 * density) * dp)
    half_width = math.pi * hbar / dq
    if half_width < 6.0 * sigma_p:
        raise GridTooCoarse(
            f"momentum half-width {half_width:.4g} is below 6 standard deviations ({6 * sigma_p:.4g})"
        )
    return GridWavefunction(p, phi, dp, hbar)


# ----------------------------------------------------------------------------
# annihilation condition

def _centered_derivative(f: np.ndarray, h: float) -> np.ndarray:
    # sixth-order seven-point stencil, interior points only
    return (
        -f[:-6] + 9.0 * f[1:-5] - 45.0 * f[2:-4] + 45.0 * f[4:-2] - 9.0 * f[5:-1] + f[6:]
    ) / (60.0 * h)


def annihilation_residual(
    state: BogoliubovState, cfg: QuadratureConfig | None = None, *, beta_shift: float = 0.0
) -> float:
    """Relative residual of ``psi' + [(u - v)/(u + v)] (omega/hbar) q psi = 0``.

    ``psi'`` comes from centered finite differences of sampled values, so the
    result checks the wavefunction against the (u, v) pair rather than
    restating how it was built.  ``beta_shift`` perturbs the wavefunction's
    phase parameter while leaving the operator alone.
    """
    cfg = cfg or DEFAULT_CONFIG
    form = bogoliubov_form(state, beta_shift=beta_shift)
    q = _grid(form, cfg.half_width_sigmas, cfg.initial_points)
    psi = form(q)
    u, v = bogoliubov_uv(state)
    k = (u - v) / (u + v) * state.omega / state.constants.hbar
    residual = _centered_derivative(psi, q[1] - q[0]) + k * q[3:-3] * psi[3:-3]
    return float(np.max(np.abs(residual)) / np.max(np.abs(psi)))
