"""
Saturating the Schroedinger-Robertson relation
===============================================

For every correlation phase the product of standard deviations equals the
modulus of the quantum correlator <pq>. The Heisenberg bound hbar/2 is
reached only at alpha = 0; away from it the state is still minimal, just
with respect to a larger effective action.
"""
import numpy as np

import ccstates as cs

print(f"{'alpha':>6} {'sqrt(VqVp)':>14} {'|<pq>|':>14} {'cov_pq':>12} {'defect':>10}")
for alpha in np.linspace(0.0, 1.4, 8):
    rep = cs.sur_report(cs.AlphaState(float(alpha)))
    ms = cs.moment_set(cs.AlphaState(float(alpha)))
    print(
        f"{alpha:6.2f} {rep.sur_lhs:14.10f} {rep.sur_rhs:14.10f} "
        f"{ms.cov_pq:12.6f} {rep.saturation_defect:10.1e}"
    )

# the bound scales with hbar
for hbar in (0.5, 1.0, 2.0):
    rep = cs.sur_report(cs.AlphaState(0.0, 1.0, cs.Constants(hbar)))
    print(f"hbar = {hbar}: sqrt(VqVp) = {rep.sur_lhs}, bound = {rep.heisenberg_bound}")

# closed forms versus a brute-force integral at a strongly correlated point
state = cs.AlphaState(1.3, 0.7)
print("closed var_q  ", cs.variance_q(state))
print("quadrature    ", cs.quad_variance_q(state))
print("closed |<pq>| ", cs.correlator_magnitude(state))
print("quadrature    ", abs(cs.quad_correlator(state)))

try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    alphas = np.linspace(0.0, 1.4, 200)
    fig, ax = plt.subplots()
    ax.plot(alphas, [cs.effective_action(cs.AlphaState(a)) for a in alphas], label="effective action")
    ax.axhline(0.5, color="k", ls=":", label="hbar / 2")
    ax.set_xlabel("alpha")
    ax.legend()
    fig.savefig("uncertainty.png", dpi=120)
