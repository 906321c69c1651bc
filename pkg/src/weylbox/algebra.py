"""Small dense complex matrices: Pauli and gamma matrices, U(2) parametrization.

Every matrix in this package is a 2x2 or 4x4 ``complex128`` numpy array.
Functions return fresh arrays; module-level constants are read-only.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

DEFAULT_TOL = 1e-12
NORM_TOL = 1e-12


def _frozen(a) -> np.ndarray:
    a = np.array(a, dtype=complex)
    a.setflags(write=False)
    return a


ID2 = _frozen(np.eye(2))
SIGMA_X = _frozen([[0, 1], [1, 0]])
SIGMA_Y = _frozen([[0, -1j], [1j, 0]])
SIGMA_Z = _frozen([[1, 0], [0, -1]])
_PAULI = {1: SIGMA_X, 2: SIGMA_Y, 3: SIGMA_Z}


class Rep(enum.Enum):
    """Representations of the (1+1)-dimensional Dirac matrices."""

    WEYL = "weyl"
    DIRAC = "dirac"
    MAJORANA = "majorana"
    JACKIW_REBBI = "jackiw-rebbi"

    @classmethod
    def parse(cls, name: "str | Rep") -> "Rep":
        if isinstance(name, cls):
            return name
        key = str(name).strip().lower().replace("_", "-")
        for rep in cls:
            if rep.value == key:
                return rep
        raise ValueError(f"unknown representation {name!r}")


def check_axis(axis: int) -> int:
    if axis not in (1, 2, 3):
        raise ValueError(f"axis must be 1, 2 or 3, got {axis!r}")
    return int(axis)


def pauli(axis: int) -> np.ndarray:
    """Return sigma_x, sigma_y or sigma_z for axis 1, 2 or 3."""
    return _PAULI[check_axis(axis)].copy()


def dagger(m: np.ndarray) -> np.ndarray:
    return np.conj(np.swapaxes(m, -1, -2))


def max_abs(m) -> float:
    return float(np.max(np.abs(m))) if np.size(m) else 0.0


def check_finite(m: np.ndarray, name: str = "matrix") -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if not np.all(np.isfinite(m)):
        raise ValueError(f"{name} has non-finite entries")
    return m


@dataclass(frozen=True)
class UnitaryParams:
    """Four real parameters of a U(2) matrix plus the global phase angle.

    The map is two-to-one: ``(mu, m)`` and ``(mu + pi, -m)`` give the same
    matrix. Neither form is canonicalized.
    """

    mu: float
    m0: float
    m1: float
    m2: float
    m3: float

    def __post_init__(self):
        for name in ("mu", "m0", "m1", "m2", "m3"):
            object.__setattr__(self, name, float(getattr(self, name)))
        vals = (self.mu, self.m0, self.m1, self.m2, self.m3)
        if not all(math.isfinite(v) for v in vals):
            raise ValueError("unitary parameters must be finite")
        norm2 = self.m0**2 + self.m1**2 + self.m2**2 + self.m3**2
        if abs(norm2 - 1.0) > NORM_TOL:
            raise ValueError(
                f"m0..m3 must lie on the unit 3-sphere, got |m|^2 = {norm2!r}"
            )

    @property
    def m(self) -> tuple[float, float, float, float]:
        return (self.m0, self.m1, self.m2, self.m3)

    def negated(self) -> "UnitaryParams":
        return UnitaryParams(self.mu, -self.m0, -self.m1, -self.m2, -self.m3)


def build_unitary(p: UnitaryParams) -> np.ndarray:
    """Assemble ``exp(i mu) [[m0 - i m3, -m2 - i m1], [m2 - i m1, m0 + i m3]]``."""
    m0, m1, m2, m3 = p.m
    core = np.array(
        [[m0 - 1j * m3, -m2 - 1j * m1], [m2 - 1j * m1, m0 + 1j * m3]], dtype=complex
    )
    return np.exp(1j * p.mu) * core


def unitary_params(u: np.ndarray, tol: float = 1e-10) -> UnitaryParams:
    """Invert :func:`build_unitary`, choosing ``mu`` in ``[0, pi)``."""
    u = check_finite(u, "U")
    if not is_unitary(u, tol):
        raise ValueError("matrix is not unitary")
    mu = 0.5 * float(np.angle(np.linalg.det(u)))
    if mu < 0:
        mu += math.pi
    if mu >= math.pi:  # a tiny negative angle rounds up to pi
        mu = 0.0
    v = np.exp(-1j * mu) * u
    m = np.array([v[0, 0].real, -v[1, 0].imag, v[1, 0].real, -v[0, 0].imag])
    m /= np.linalg.norm(m)
    return UnitaryParams(mu, *map(float, m))


def random_unitary_params(rng: np.random.Generator) -> UnitaryParams:
    m = rng.normal(size=4)
    m /= np.linalg.norm(m)
    return UnitaryParams(float(rng.uniform(0.0, math.pi)), *map(float, m))


def random_unitary(rng: np.random.Generator) -> np.ndarray:
    return build_unitary(random_unitary_params(rng))


def is_unitary(m: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    m = np.asarray(m, dtype=complex)
    if tol <= 0:
        raise ValueError("tol must be positive")
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    return max_abs(dagger(m) @ m - np.eye(m.shape[0])) <= tol


def is_real_orthogonal(m: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    m = np.asarray(m, dtype=complex)
    if tol <= 0:
        raise ValueError("tol must be positive")
    if max_abs(m.imag) > tol:
        return False
    r = m.real
    return max_abs(r.T @ r - np.eye(r.shape[0])) <= tol


# gamma^0, gamma^1 for each (1+1)-d representation
_GAMMA_PAIRS = {
    Rep.WEYL: (SIGMA_X, -1j * SIGMA_Y),
    Rep.DIRAC: (SIGMA_Z, 1j * SIGMA_Y),
    Rep.MAJORANA: (SIGMA_Y, -1j * SIGMA_Z),
    Rep.JACKIW_REBBI: (SIGMA_X, 1j * SIGMA_Z),
}

# the Pauli axis j with gamma^0 gamma^1 = sigma_j
REP_AXIS = {Rep.WEYL: 3, Rep.DIRAC: 1, Rep.MAJORANA: 1, Rep.JACKIW_REBBI: 2}


def gamma_pair(rep: Rep | str) -> tuple[np.ndarray, np.ndarray]:
    g0, g1 = _GAMMA_PAIRS[Rep.parse(rep)]
    return np.array(g0), np.array(g1)


def alpha_matrix(rep: Rep | str) -> np.ndarray:
    """``gamma^0 gamma^1``, the matrix multiplying ``-i d/dx`` in the Hamiltonian."""
    g0, g1 = gamma_pair(rep)
    return g0 @ g1


def verify_clifford_2d(g0: np.ndarray, g1: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    """Anticommutators against diag(1, -1) and the adjoint relation."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    gs = (np.asarray(g0, complex), np.asarray(g1, complex))
    metric = np.diag([1.0, -1.0])
    for mu in range(2):
        for nu in range(2):
            anti = gs[mu] @ gs[nu] + gs[nu] @ gs[mu]
            if max_abs(anti - 2 * metric[mu, nu] * ID2) > tol:
                return False
        if max_abs(dagger(gs[mu]) - gs[0] @ gs[mu] @ gs[0]) > tol:
            return False
    return True


def verify_clifford_4d(gammas, tol: float = DEFAULT_TOL) -> bool:
    metric = np.diag([1.0, -1.0, -1.0, -1.0])
    eye = np.eye(4)
    for mu in range(4):
        for nu in range(4):
            anti = gammas[mu] @ gammas[nu] + gammas[nu] @ gammas[mu]
            if max_abs(anti - 2 * metric[mu, nu] * eye) > tol:
                return False
        if max_abs(dagger(gammas[mu]) - gammas[0] @ gammas[mu] @ gammas[0]) > tol:
            return False
    return True


@lru_cache(maxsize=None)
def _weyl_4d():
    zero = np.zeros((2, 2), dtype=complex)
    sig = (ID2, SIGMA_X, SIGMA_Y, SIGMA_Z)
    sig_bar = (ID2, -SIGMA_X, -SIGMA_Y, -SIGMA_Z)
    gammas = tuple(
        _frozen(np.block([[zero, -sig_bar[mu]], [-sig[mu], zero]])) for mu in range(4)
    )
    g5 = _frozen(1j * gammas[0] @ gammas[1] @ gammas[2] @ gammas[3])
    big_sigma = (
        _frozen(1j * gammas[2] @ gammas[3]),
        _frozen(1j * gammas[3] @ gammas[1]),
        _frozen(1j * gammas[1] @ gammas[2]),
    )
    return gammas, g5, big_sigma


def gamma_set_weyl_4d():
    """Chiral-basis Dirac matrices in (3+1) dimensions.

    Returns:
        ``(gammas, gamma5, Sigma)``: the four gamma matrices, the chirality
        matrix ``i g0 g1 g2 g3 = diag(1, 1, -1, -1)`` and the spin matrices
        ``(i g2 g3, i g3 g1, i g1 g2) = diag(sigma_j, sigma_j)``. Arrays are
        read-only.
    """
    return _weyl_4d()
