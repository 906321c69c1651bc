"""Changes between the four (1+1)-d representations.

A change ``source -> target`` is a unitary ``S`` with ``psi_target = S psi_source``
and ``S alpha_source S^dagger = alpha_target`` where ``alpha = gamma^0 gamma^1``.
Only the three changes into the Weyl representation are fixed explicitly;
every other pair is composed through Weyl, so its global phase is whatever
the composition produces.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (
    ID2,
    SIGMA_X,
    SIGMA_Z,
    Rep,
    alpha_matrix,
    dagger,
    is_unitary,
    max_abs,
)

_SQRT_HALF = 1.0 / np.sqrt(2.0)

# source -> Weyl
_TO_WEYL = {
    Rep.WEYL: np.array(ID2),
    Rep.DIRAC: _SQRT_HALF * (SIGMA_X + SIGMA_Z),
    Rep.MAJORANA: np.exp(-0.25j * np.pi) * _SQRT_HALF * np.array([[1, 1], [1j, -1j]]),
    Rep.JACKIW_REBBI: _SQRT_HALF * (ID2 - 1j * SIGMA_X),
}


@dataclass(frozen=True, eq=False)
class RepChange:
    source: Rep
    target: Rep
    S: np.ndarray

    def __post_init__(self):
        s = np.array(self.S, dtype=complex)
        if s.shape != (2, 2) or not is_unitary(s, 1e-12):
            raise ValueError("representation change matrix must be 2x2 unitary")
        residual = s @ alpha_matrix(self.source) @ dagger(s) - alpha_matrix(self.target)
        if max_abs(residual) > 1e-12:
            raise ValueError(
                f"S does not carry {self.source.value} onto {self.target.value}"
            )
        s.setflags(write=False)
        object.__setattr__(self, "S", s)

    def inverse(self) -> "RepChange":
        return RepChange(self.target, self.source, dagger(self.S))


def rep_change_matrix(source: Rep | str, target: Rep | str) -> RepChange:
    source, target = Rep.parse(source), Rep.parse(target)
    if source is target:
        return RepChange(source, target, np.eye(2))
    s = dagger(_TO_WEYL[target]) @ _TO_WEYL[source]
    return RepChange(source, target, s)


def transform_components(S: np.ndarray, pair) -> np.ndarray:
    """Map two-component data (or an ``(..., 2)`` stack of it) through ``S``."""
    pair = np.asarray(pair, dtype=complex)
    return pair @ np.asarray(S, dtype=complex).T


def conjugate_hamiltonian_matrix(S: np.ndarray, sigma: np.ndarray) -> np.ndarray:
    S = np.asarray(S, dtype=complex)
    if not is_unitary(S, 1e-12):
        raise ValueError("S must be unitary")
    return S @ np.asarray(sigma, dtype=complex) @ dagger(S)
