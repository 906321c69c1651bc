"""Wave-packet evolution in the computed eigenbasis.

A Gaussian packet is expanded in eigenstates and evolved by phases. The
norm and the wall currents are monitored; for the one-component 1D Weyl
particle the packet moves rigidly at speed c.

Run: python demos/05_dynamics.py
"""

import math

import numpy as np

from weylbox.algebra import random_unitary
from weylbox.boundary import PhaseBC, bc_weyl_axis
from weylbox.dynamics import EvolutionRun, evolve, gaussian_spinor, spectral_basis, time_series, weyl1d_basis
from weylbox.spectral import SpectralProblem, Weyl1DProblem

# A random self-adjoint family for the axis-1 operator.
u = random_unitary(np.random.default_rng(5))
prob = SpectralProblem(1, bc_weyl_axis(1, u))
basis = spectral_basis(prob, (-160, 160), 2048)
run = EvolutionRun.create(prob, gaussian_spinor(1.0, 2048, 0.4, 0.05, (1.0, 0.5j)), basis)
print(f"{len(basis)} modes capture {run.captured_norm:.9f} of the packet")
for row in time_series(run, [0.0, 0.5, 1.0, 5.0, 10.0]):
    print(f"  t={row['t']:5.2f} norm={row['norm']:.12f} J(0)={row['J0']:+.4e} J(l)={row['Jl']:+.4e}")

# 1D Weyl particle with periodic condition: the packet returns after t = l / c.
weyl = Weyl1DProblem(PhaseBC(0.0))
psi0 = gaussian_spinor(1.0, 1024, 0.3, 0.05, (1.0,))
wrun = EvolutionRun.create(weyl, psi0, weyl1d_basis(weyl, (-32, 31), 1024))
for t in (0.0, 0.25, 0.5, 1.0):
    rho = evolve(wrun, t).density()
    print(f"  t={t:.2f}: packet peak at x = {psi0.grid[np.argmax(rho)]:.4f}")

# Second-order convergence of the continuity residual.
prev = None
for n in (256, 512, 1024):
    g = gaussian_spinor(1.0, n, 0.5, 0.05, (1.0,))
    res = time_series(EvolutionRun.create(weyl, g, weyl1d_basis(weyl, (-32, 31), n)), [0.25])[0]
    r = res["continuity_residual"]
    note = "" if prev is None else f"  order {math.log2(prev / r):.3f}"
    print(f"  N={n:5d} continuity residual {r:.3e}{note}")
    prev = r
