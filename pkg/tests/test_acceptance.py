"""Exit criteria for the toolkit, one test per criterion.

Each test records a PASS/FAIL line with its worst observed error; the lines
are printed in the "acceptance criteria" section of the pytest summary.
"""
import csv
import io
import math

import numpy as np

from ccstates import cli, moments, oracle, states
from ccstates.states import AlphaState, Constants, ThermalSpec

T_GRID = np.logspace(-3, 3, 121)


def test_01_sur_saturation(criterion):
    closed, quad = 0.0, 0.0
    for alpha in np.linspace(0.0, 1.45, 100):
        st = AlphaState(float(alpha))
        rep = moments.sur_report(st)
        closed = max(closed, abs(rep.sur_lhs - rep.sur_rhs) / rep.sur_rhs)
        lhs = math.sqrt(oracle.quad_variance_q(st) * oracle.quad_variance_p(st))
        rhs = abs(oracle.quad_correlator(st))
        quad = max(quad, abs(lhs - rhs) / rhs)
    ok = closed < 1e-14 and quad < 1e-6
    criterion(ok, f"closed-form defect {closed:.2e} (< 1e-14), quadrature defect {quad:.2e} (< 1e-6)")
    assert ok


def test_02_heisenberg_limit(criterion):
    worst = 0.0
    for hbar in (0.5, 1.0, 2.0):
        st = AlphaState(0.0, 1.0, Constants(hbar))
        rep = moments.sur_report(st)
        worst = max(worst, abs(rep.sur_lhs - hbar / 2), abs(rep.sur_rhs - hbar / 2))
        worst = max(worst, abs(abs(oracle.quad_correlator(st)) - hbar / 2))
    criterion(worst < 1e-12, f"max |side - hbar/2| = {worst:.2e} (< 1e-12)")
    assert worst < 1e-12


def test_03_oracle_agreement(criterion):
    worst = {"var_q": 0.0, "var_p": 0.0, "correlator": 0.0}
    for gamma in (0.5, 1.0, 2.0):
        for alpha in np.arange(0.0, 1.41, 0.1):
            st = AlphaState(float(alpha), gamma)
            pairs = {
                "var_q": (oracle.quad_variance_q(st), moments.variance_q(st)),
                "var_p": (oracle.quad_variance_p(st), moments.variance_p(st)),
                "correlator": (abs(oracle.quad_correlator(st)), moments.correlator_magnitude(st)),
            }
            for key, (numeric, exact) in pairs.items():
                worst[key] = max(worst[key], abs(numeric - exact) / exact)
    ok = max(worst.values()) < 1e-8
    criterion(ok, ", ".join(f"{k} {v:.2e}" for k, v in worst.items()) + " (rel. < 1e-8)")
    assert ok


def test_04_parametrization_equivalence(criterion):
    modulus, phase = 0.0, 0.0
    for alpha in np.linspace(0.0, 1.45, 20):
        st = AlphaState(float(alpha))
        bog = states.BogoliubovState(states.tau_from_alpha(float(alpha)), math.pi / 4)
        sigma = math.sqrt(moments.variance_q(st))
        q = np.linspace(-8 * sigma, 8 * sigma, 1000)
        modulus = max(modulus, np.max(np.abs(np.abs(states.psi_alpha(st, q)) - np.abs(states.psi_tau_phi(bog, q)))))
        im_a = states.gaussian_form(st).coefficient.imag * q * q
        im_b = states.gaussian_form(bog).coefficient.imag * q * q
        phase = max(phase, np.max(np.abs(np.abs(im_a) - np.abs(im_b))))
    ok = modulus < 1e-10 and phase < 1e-10
    criterion(ok, f"max modulus gap {modulus:.2e}, max |Im exponent| gap {phase:.2e} (< 1e-10)")
    assert ok


def test_05_temperature_map(criterion):
    roundtrip, variances = 0.0, 0.0
    for T in T_GRID:
        spec = ThermalSpec(float(T))
        st = states.from_thermal(spec)
        roundtrip = max(roundtrip, abs(states.temperature_from_alpha(st) - T) / T)
        tq, tp = moments.thermal_variances(spec)
        variances = max(
            variances,
            abs(tq - moments.variance_q(st)) / tq,
            abs(tp - moments.variance_p(st)) / tp,
        )
    ok = roundtrip < 1e-12 and variances < 1e-12
    criterion(ok, f"T->alpha->T {roundtrip:.2e}, thermal vs alpha variances {variances:.2e} (rel. < 1e-12)")
    assert ok


def test_06_planck_consistency(criterion):
    worst, equal = 0.0, True
    for T in T_GRID:
        spec = ThermalSpec(float(T))
        st = states.from_thermal(spec)
        energy = 0.5 * moments.variance_p(st) + 0.5 * spec.omega**2 * moments.variance_q(st)
        x = 1.0 / (2.0 * T)
        planck = 0.5 / math.tanh(x)
        worst = max(worst, abs(energy - planck) / planck)
        k, u = moments.mean_kinetic_potential(spec)
        equal &= k == u
    ok = worst < 1e-12 and equal
    criterion(ok, f"energy vs (hbar w/2)coth {worst:.2e} (rel. < 1e-12), K == U exactly: {equal}")
    assert ok


def test_07_monotonicity(criterion):
    grids = {
        "linear": np.concatenate([[0.0], np.linspace(0.05, 20.0, 60)]),
        "log": np.logspace(np.log10(0.05), 3, 80),
    }
    failures = []
    for label, grid in grids.items():
        assert len(grid) >= 50 and np.all(np.diff(grid) > 0)
        cols = {k: [] for k in ("var_q", "var_p", "uncertainty_product", "effective_action", "square_area")}
        for T in grid:
            spec = ThermalSpec(float(T))
            st = states.from_thermal(spec)
            ms = moments.moment_set(st)
            cols["var_q"].append(ms.var_q)
            cols["var_p"].append(ms.var_p)
            cols["uncertainty_product"].append(ms.uncertainty_product)
            cols["effective_action"].append(moments.effective_action(st))
            cols["square_area"].append(moments.phase_plane_square(spec).area)
        failures += [f"{label}:{k}" for k, v in cols.items() if not np.all(np.diff(v) > 0)]
    criterion(not failures, "strictly increasing on both grids" if not failures else f"not monotone: {failures}")
    assert not failures


def test_08_annihilation_ode(criterion):
    good, bad = 0.0, math.inf
    for alpha in np.linspace(0.0, 1.45, 20):
        bog = states.to_bogoliubov(AlphaState(float(alpha)))
        good = max(good, oracle.annihilation_residual(bog))
        bad = min(bad, oracle.annihilation_residual(bog, beta_shift=0.1))
    ok = good < 1e-6 and bad > 1e-3
    criterion(ok, f"max residual {good:.2e} (< 1e-6), min perturbed residual {bad:.2e} (> 1e-3)")
    assert ok


def test_09_fourier_duality(criterion):
    worst = 0.0
    for alpha in np.linspace(0.0, 1.4, 10):
        st = AlphaState(float(alpha))
        mom = oracle.momentum_distribution(oracle.sample_grid(st))
        worst = max(worst, abs(mom.variance() - moments.variance_p(st)) / moments.variance_p(st))
    criterion(worst < 1e-6, f"DFT momentum variance rel. error {worst:.2e} (< 1e-6)")
    assert worst < 1e-6


def test_10_cli_contract(criterion, capsys):
    problems = []

    assert cli.main(["sweep", "--t-min", "0", "--t-max", "2", "--steps", "9", "--omega", "1.5", "--hbar", "0.8"]) == 0
    out = capsys.readouterr().out
    lines = out.splitlines()
    if lines[0] != "T,alpha,tau,var_q,var_p,cov_pq,correlator,sur_lhs,sur_rhs,planck_energy,effective_action,square_area":
        problems.append("header")
    rows = list(csv.DictReader(io.StringIO(out)))
    if len(rows) != 9:
        problems.append(f"row count {len(rows)}")
    if float(rows[0]["var_q"]) != 0.8 / (2 * 1.5) or float(rows[0]["square_area"]) != 0.25:
        problems.append("T=0 row")

    if cli.main(["verify"]) != 0:
        problems.append("verify defaults")
    if cli.main(["verify", "--tol", "1e-30"]) != 1:
        problems.append("verify impossible tolerance")
    capsys.readouterr()

    criterion(not problems, "header, row count, T=0 row, verify exit codes" if not problems else str(problems))
    assert not problems
