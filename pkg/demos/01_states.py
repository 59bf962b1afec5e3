"""
Correlated coherent states in three parametrizations
=====================================================

A correlated coherent state is a Gaussian whose exponent picks up an
imaginary part controlled by the correlation phase alpha. The same state
can be labelled by alpha, by a Bogoliubov pair (tau, phi = pi/4), or by a
temperature. This script builds one state each way and checks that the
wavefunctions coincide.
"""
import math

import numpy as np

import ccstates as cs

# start from a moderately correlated state, alpha = pi/4
state = cs.AlphaState(math.pi / 4)
sigma = math.sqrt(cs.variance_q(state))
q = np.linspace(-6 * sigma, 6 * sigma, 801)
psi = cs.psi_alpha(state, q)

# the same state as a squeezed vacuum: tanh(2 tau) = sin(alpha)
bog = cs.to_bogoliubov(state)
print(f"tau = {bog.tau:.6f}, phi = {bog.phi:.6f}")
u, v = cs.bogoliubov_uv(bog)
print(f"|u|^2 - |v|^2 - 1 = {abs(u) ** 2 - abs(v) ** 2 - 1:.1e}")

# and as a thermal label: alpha = atan(csch(hbar omega / 2 k_B T))
spec = cs.to_thermal(state)
print(f"temperature  = {spec.temperature:.6f}  (hbar = omega = k_B = 1)")

# modulus agrees in all three; the phase of the exponent differs only in sign convention
gap_bog = np.max(np.abs(np.abs(cs.psi_tau_phi(bog, q)) - np.abs(psi)))
gap_th = np.max(np.abs(cs.psi_thermal(spec, q) - psi))
print(f"max | |psi_tau| - |psi_alpha| | = {gap_bog:.2e}")
print(f"max |psi_T - psi_alpha|        = {gap_th:.2e}")
print(f"norm by quadrature             = {cs.quad_norm(state):.12f}")

try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, ax = plt.subplots()
    ax.plot(q, psi.real, label="Re psi")
    ax.plot(q, psi.imag, label="Im psi")
    ax.plot(q, np.abs(psi), "k--", label="|psi|")
    ax.set_xlabel("q")
    ax.legend()
    fig.savefig("states.png", dpi=120)
