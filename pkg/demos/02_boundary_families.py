"""Self-adjoint boundary families on [0, l] and how they are classified.

Every family member is a unitary U(2) matrix, entered through (mu, m0..m3).
We build a few named members, confirm the boundary term vanishes, classify
them as confining or not, and check which admit real-valued solutions.

Run: python demos/02_boundary_families.py
"""

import math

import numpy as np

from weylbox.algebra import SIGMA_X, Rep, UnitaryParams, random_unitary
from weylbox.boundary import (
    bc_dirac_rep,
    bc_equivalent,
    bc_via_transform,
    bc_weyl_axis,
    bc_weyl_axis3_swapped,
    boundary_term,
    classify_confinement,
    format_record,
    mit_bag_matrix,
    mit_bag_spec,
    reality_admissible,
    to_record,
    transported_unitary,
)
from weylbox.representations import rep_change_matrix

rng = np.random.default_rng(0)

named = {
    "periodic (A3 = sigma_x)": bc_weyl_axis(3, SIGMA_X),
    "antiperiodic (A3 = -sigma_x)": bc_weyl_axis(3, -SIGMA_X),
    "MIT bag (A3 = i)": mit_bag_spec(),
    "Dirichlet-upper (A1 = -1)": bc_weyl_axis(1, -np.eye(2)),
    "axis 2, U = 1": bc_weyl_axis(2, UnitaryParams(0.0, 1.0, 0.0, 0.0, 0.0)),
}
for name, spec in named.items():
    cls = classify_confinement(spec)
    psi, chi = (spec.subspace() @ rng.normal(size=(2, 2))).T
    print(
        f"{name:<30} {cls.label.value:<14} real-admissible={reality_admissible(spec)!s:<5} "
        f"|boundary term|={abs(boundary_term(psi, chi, spec.axis)):.1e}"
    )

# The MIT bag condition also has a swapped encoding with W = -i sigma_x.
print("\nMIT bag swapped form agrees:", bc_equivalent(mit_bag_spec(), bc_weyl_axis3_swapped(mit_bag_matrix())))

# Pull a Weyl-representation family back into the Dirac representations.
u = random_unitary(rng)
for rep in (Rep.DIRAC, Rep.MAJORANA, Rep.JACKIW_REBBI):
    moved = bc_via_transform(u, rep_change_matrix(rep, Rep.WEYL))
    same_u = bc_equivalent(moved, bc_dirac_rep(rep, u))
    adjusted = bc_equivalent(moved, bc_dirac_rep(rep, transported_unitary(rep, u)))
    print(f"{rep.value:>13}: same U {same_u}, adjusted U {adjusted}")

# Records are the plain-text form used by the command line tool.
print("\n" + format_record(to_record(bc_weyl_axis(3, UnitaryParams(math.pi / 2, 0, 1, 0, 0)))))
