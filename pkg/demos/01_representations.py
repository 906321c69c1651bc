"""Dirac matrices in four (1+1)-d representations and the changes between them.

Run: python demos/01_representations.py
"""

import numpy as np

from weylbox.algebra import Rep, alpha_matrix, gamma_pair, verify_clifford_2d
from weylbox.representations import rep_change_matrix

np.set_printoptions(precision=3, suppress=True)

# Each representation is a pair (gamma0, gamma1) obeying the Clifford relations.
for rep in Rep:
    g0, g1 = gamma_pair(rep)
    print(f"{rep.value:>13}: clifford ok = {verify_clifford_2d(g0, g1)}")
    print("   alpha = gamma0 gamma1 =", alpha_matrix(rep).tolist())

# The changes into the Weyl representation diagonalize alpha.
for rep in (Rep.DIRAC, Rep.MAJORANA, Rep.JACKIW_REBBI):
    ch = rep_change_matrix(rep, Rep.WEYL)
    moved = ch.S @ alpha_matrix(rep) @ ch.S.conj().T
    print(f"\n{rep.value} -> weyl\nS =\n{ch.S}\nS alpha S^dagger =\n{moved}")

# Changes between two non-Weyl representations are composed through Weyl.
ch = rep_change_matrix("majorana", "jackiw-rebbi")
print("\nmajorana -> jackiw-rebbi\n", ch.S)
