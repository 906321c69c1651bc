"""Boosts, rotations, chirality and helicity for Weyl spinors.

Run: python demos/04_kinematics.py
"""

import math

import numpy as np

from weylbox.algebra import gamma_set_weyl_4d
from weylbox.kinematics import (
    BoostParams,
    PlaneWave1D,
    PlaneWave3D,
    RotationParams,
    boost_1d,
    boost_4d,
    classical_velocity,
    covariance_residual,
    helicity_eigenvalue,
    reality_axis_classification,
    rotation_4d,
    spin_along_velocity,
)

np.set_printoptions(precision=4, suppress=True)

lam, spin = boost_4d(BoostParams(3, math.atanh(0.6)))
print("boost along z with beta = 0.6:\n", lam.real)
print("covariance residual:", covariance_residual(lam, spin))

_, spin = rotation_4d(RotationParams(2, 2 * math.pi))
print("\nspinor matrix after a full turn is -1:", np.allclose(spin, -np.eye(4)))
g5 = gamma_set_weyl_4d()[1]
print("boosts and rotations commute with gamma5:", np.allclose(spin @ g5, g5 @ spin))

_, s1, s2 = boost_1d(0.8)
print(f"\n(1+1)-d boost scalars s1={s1:.6f} s2={s2:.6f} product={s1 * s2!r}")

print("\nhelicity and spin along velocity (p along (1, 1, 0))")
for kind in (1, 2):
    for sign in (1, -1):
        pw = PlaneWave3D.create([1.0, 1.0, 0.0], sign, kind)
        v = classical_velocity(pw)
        print(
            f"  phi_{kind}, sgn E = {sign:+d}: helicity {helicity_eigenvalue(pw):+d}, "
            f"v/c = {v}, spin along v {spin_along_velocity(pw):+d}"
        )

print("\n1D: velocity depends on the kind only")
for kind in (1, 2):
    print(f"  kind {kind}:", [classical_velocity(PlaneWave1D.from_energy(kind, s)) for s in (1, -1)])

print("\naxes admitting real solutions:", reality_axis_classification())
