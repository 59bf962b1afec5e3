"""Invariants checked over randomly drawn parameters."""
import math

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from ccstates import moments, oracle, states
from ccstates.states import AlphaState, BogoliubovState, Constants, ThermalSpec

alphas = st.floats(0.0, 1.45)
open_alphas = st.floats(1e-6, 1.45)
positive = st.floats(0.2, 5.0)
constants = st.builds(Constants, positive, positive)
alpha_states = st.builds(AlphaState, alphas, positive, constants)


@given(alpha_states)
def test_normalization_all_parametrizations(state):
    assert abs(oracle.quad_norm(state) - 1) < 1e-9
    assert abs(oracle.quad_norm(states.to_bogoliubov(state)) - 1) < 1e-9
    assert abs(oracle.quad_norm(states.to_thermal(state)) - 1) < 1e-9


@given(alpha_states)
def test_parametrizations_agree_pointwise(state):
    sigma = math.sqrt(moments.variance_q(state))
    q = np.linspace(-8 * sigma, 8 * sigma, 401)
    psi = states.psi_alpha(state, q)
    scale = np.max(np.abs(psi))
    assert np.max(np.abs(np.abs(states.psi_tau_phi(states.to_bogoliubov(state), q)) - np.abs(psi))) < 1e-10 * scale
    thermal = states.to_thermal(state)
    # tiny alpha maps to T = 0, the cold vacuum
    other = states.psi_alpha(states.from_thermal(thermal), q) if thermal.temperature == 0 else states.psi_thermal(thermal, q)
    assert np.max(np.abs(other - psi)) < 1e-10 * scale


@given(alpha_states)
def test_imaginary_exponents_agree(state):
    a = states.gaussian_form(state).coefficient
    b = states.gaussian_form(states.to_bogoliubov(state)).coefficient
    assert abs(abs(a.imag) - abs(b.imag)) <= 1e-10 * abs(a)


@given(open_alphas)
def test_roundtrips(alpha):
    assert abs(states.alpha_from_tau(states.tau_from_alpha(alpha)) - alpha) <= 1e-12 * alpha + 1e-15
    back = states.alpha_from_temperature(states.to_thermal(AlphaState(alpha)))
    assert abs(back - alpha) <= 1e-12 * alpha


@given(st.floats(0.0, 1e-3))
def test_small_alpha_limit_is_linear(alpha):
    # imaginary part of the exponent coefficient -> 0 like sin(alpha) / (4 s0^2)
    c = states.gaussian_form(AlphaState(alpha)).coefficient
    assert abs(c.imag - alpha / 2) <= alpha**3


@given(alpha_states)
def test_sur_saturation_and_floor(state):
    rep = moments.sur_report(state)
    assert abs(rep.saturation_defect) < 1e-14
    assert rep.sur_rhs >= rep.heisenberg_bound
    if state.alpha == 0:
        assert rep.sur_rhs == rep.heisenberg_bound
    elif state.alpha > 1e-7:
        # below that, sec(alpha) - 1 ~ alpha^2 / 2 is under double resolution
        assert rep.sur_rhs > rep.heisenberg_bound


@given(alpha_states)
def test_correlator_decomposition(state):
    ms = moments.moment_set(state)
    hbar = state.constants.hbar
    assert math.isclose(ms.correlator_mag**2, ms.cov_pq**2 + hbar**2 / 4, rel_tol=1e-12)
    assert moments.variance_p(state) == state.gamma**2 * moments.variance_q(state)


@st.composite
def thermal_specs(draw):
    # T in units of hbar omega / k_B, so x = 1 / (2 t) stays in [5e-4, 500]
    omega, c = draw(positive), draw(constants)
    t = draw(st.floats(1e-3, 1e3))
    return ThermalSpec(t * c.hbar * omega / c.k_B, omega, c)


@given(thermal_specs())
def test_thermal_identification(spec):
    state = states.from_thermal(spec)
    vq, vp = moments.thermal_variances(spec)
    assert math.isclose(vq, moments.variance_q(state), rel_tol=1e-12)
    assert math.isclose(vp, moments.variance_p(state), rel_tol=1e-12)
    energy = 0.5 * moments.variance_p(state) + 0.5 * spec.omega**2 * moments.variance_q(state)
    assert math.isclose(energy, moments.planck_energy(spec), rel_tol=1e-12)


@given(st.floats(0.05, 50.0), st.floats(1.001, 3.0))
def test_monotone_in_temperature(t1, factor):
    a, b = ThermalSpec(t1), ThermalSpec(t1 * factor)
    sa, sb = states.from_thermal(a), states.from_thermal(b)
    assert moments.variance_q(sa) < moments.variance_q(sb)
    assert moments.moment_set(sa).uncertainty_product < moments.moment_set(sb).uncertainty_product
    assert moments.effective_action(sa) < moments.effective_action(sb)
    assert moments.phase_plane_square(a).area < moments.phase_plane_square(b).area


@settings(max_examples=30)
@given(alpha_states)
def test_oracle_matches_closed_forms(state):
    assert math.isclose(oracle.quad_variance_q(state), moments.variance_q(state), rel_tol=1e-8)
    assert math.isclose(oracle.quad_variance_p(state), moments.variance_p(state), rel_tol=1e-8)
    c = oracle.quad_correlator(state)
    assert math.isclose(abs(c), moments.correlator_magnitude(state), rel_tol=1e-8)
    assert abs(c.real - moments.covariance(state)) <= 1e-8 * state.constants.hbar


@settings(max_examples=30)
@given(alpha_states)
def test_fourier_duality(state):
    grid = oracle.sample_grid(state)
    mom = oracle.momentum_distribution(grid)
    product = moments.moment_set(state).uncertainty_product
    assert math.isclose(grid.variance() * mom.variance(), product, rel_tol=1e-6)


@settings(max_examples=30)
@given(st.floats(0.0, 1.0), st.floats(0.0, math.pi), positive)
def test_annihilation_residual_discriminates(tau, phi, omega):
    state = BogoliubovState(tau, phi, omega)
    good = oracle.annihilation_residual(state)
    bad = oracle.annihilation_residual(state, beta_shift=0.1)
    assert good < 1e-6
    assert bad > 1e3 * good
