"""Spectra and eigenfunctions of the Weyl operator on an interval.

The eigenvalues are the zeros of a 2x2 boundary determinant. We compare the
root finder with the closed forms for four named families and with an
independent RK4 shooting integration.

Run: python demos/03_spectra.py
"""

import math

import numpy as np

from weylbox.algebra import SIGMA_X
from weylbox.boundary import bc_weyl_axis, mit_bag_spec
from weylbox.spectral import (
    SpectralProblem,
    eigenfunction,
    find_spectrum,
    shooting_oracle,
    spectrum_1d_weyl,
)

cases = {
    "periodic": (bc_weyl_axis(3, SIGMA_X), (-7, 7), "k = 2 pi n"),
    "antiperiodic": (bc_weyl_axis(3, -SIGMA_X), (-7, 7), "k = pi (2n + 1)"),
    "MIT bag": (mit_bag_spec(), (0, 8), "k = (2n + 1) pi / 2"),
    "Dirichlet-upper": (bc_weyl_axis(1, -np.eye(2)), (-4, 4), "k = pi n"),
}
for name, (spec, window, law) in cases.items():
    prob = SpectralProblem(spec.axis, spec)
    pairs = find_spectrum(prob, window)
    ks = ", ".join(f"{p.k / math.pi:+.6f}" for p in pairs)
    degs = {p.degeneracy for p in pairs}
    shoot = max(shooting_oracle(prob, p.k) for p in pairs)
    print(f"{name:<16} {law:<20} k/pi = [{ks}] degeneracy {degs} shooting sigma {shoot:.1e}")

# Eigenfunctions come back orthonormal under the trapezoid rule.
prob = SpectralProblem(3, mit_bag_spec())
states = [s for p in find_spectrum(prob, (0, 8)) for s in eigenfunction(prob, p, 1001)]
gram = np.array([[a.inner(b) for b in states] for a in states])
print("\nMIT bag Gram matrix deviation from identity:", np.max(np.abs(gram - np.eye(len(states)))))
print("MIT bag ground-state density at the walls:", states[0].density()[[0, -1]])

# The one-component 1D Weyl particle has k_n = (eta + 2 pi n) / l.
for eta in (0.0, math.pi, 1.0):
    print(f"1D Weyl eta={eta:.3f}:", [round(e, 4) for _, e in spectrum_1d_weyl(1, eta, 1.0, (-2, 2))])
