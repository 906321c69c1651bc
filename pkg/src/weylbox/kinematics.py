"""Lorentz boosts, rotations, chirality and helicity in the chiral basis.

Coordinates are ordered ``(ct, x, y, z)``. The vector matrices come from the
generators ``K_j`` (boosts) and ``J_j`` (rotations) through closed forms:
with ``G = i K_j`` one has ``G^3 = G``, and with ``G = i J_j`` one has
``G^3 = -G``, so the exponentials reduce to cosh/sinh or cos/sin.

Spin eigenvalues are reported as +-1; the hbar/2 factor is left out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import block_diag

from .algebra import ID2, SIGMA_X, SIGMA_Y, SIGMA_Z, check_axis, gamma_set_weyl_4d, max_abs, pauli

_ZERO2 = np.zeros((2, 2), dtype=complex)


def _half_i(m):
    return 0.5j * m


BOOST_GENERATORS = {
    1: np.block([[1j * SIGMA_X, _ZERO2], [_ZERO2, _ZERO2]]),
    2: np.block([[_ZERO2, _half_i(ID2 + SIGMA_Z)], [_half_i(ID2 + SIGMA_Z), _ZERO2]]),
    3: np.block(
        [[_ZERO2, _half_i(SIGMA_X + 1j * SIGMA_Y)], [_half_i(SIGMA_X - 1j * SIGMA_Y), _ZERO2]]
    ),
}

ROTATION_GENERATORS = {
    1: np.block([[_ZERO2, _ZERO2], [_ZERO2, SIGMA_Y]]),
    2: np.block([[_ZERO2, _half_i(ID2 - SIGMA_Z)], [-_half_i(ID2 - SIGMA_Z), _ZERO2]]),
    3: np.block(
        [[_ZERO2, -_half_i(SIGMA_X - 1j * SIGMA_Y)], [_half_i(SIGMA_X + 1j * SIGMA_Y), _ZERO2]]
    ),
}


@dataclass(frozen=True)
class BoostParams:
    axis: int | None  # None for (1+1) dimensions
    rapidity: float

    def __post_init__(self):
        if self.axis is not None:
            check_axis(self.axis)
        if not math.isfinite(self.rapidity):
            raise ValueError("rapidity must be finite")

    @property
    def beta(self) -> float:
        return math.tanh(self.rapidity)

    @property
    def gamma(self) -> float:
        return math.cosh(self.rapidity)


@dataclass(frozen=True)
class RotationParams:
    axis: int
    angle: float

    def __post_init__(self):
        check_axis(self.axis)
        if not math.isfinite(self.angle):
            raise ValueError("angle must be finite")


def boost_4d(bp: BoostParams) -> tuple[np.ndarray, np.ndarray]:
    """Vector matrix ``exp(i w K_j)`` and spinor matrix ``exp(-w g0 gj / 2)``.

    The spinor matrix is block diagonal: ``cosh(w/2) - sinh(w/2) sigma_j`` on
    the upper Weyl spinor and ``cosh(w/2) + sinh(w/2) sigma_j`` on the lower.
    """
    if bp.axis is None:
        raise ValueError("boost_4d needs a spatial axis; use boost_1d for (1+1)-d")
    w = bp.rapidity
    g = 1j * BOOST_GENERATORS[bp.axis]
    lam = np.eye(4) + math.sinh(w) * g + (math.cosh(w) - 1.0) * (g @ g)
    ch, sh = math.cosh(w / 2), math.sinh(w / 2)
    sig = pauli(bp.axis)
    spin = block_diag(ch * ID2 - sh * sig, ch * ID2 + sh * sig)
    return lam, spin


def boost_1d(rapidity: float) -> tuple[np.ndarray, float, float]:
    """``(Lambda, s1, s2)`` for a boost along x in (1+1) dimensions.

    ``Lambda = exp(-w sigma_x)`` acts on ``(ct, x)``; the spinor matrix is
    ``diag(s1, s2)`` with ``s1 = cosh(w/2) - sinh(w/2)`` and ``s2`` the inverse.
    """
    w = float(rapidity)
    lam = np.array([[math.cosh(w), -math.sinh(w)], [-math.sinh(w), math.cosh(w)]])
    # exp(-+w/2) equals cosh -+ sinh exactly and keeps s1*s2 = 1 to rounding
    return lam, math.exp(-w / 2), math.exp(w / 2)


def rotation_4d(rp: RotationParams) -> tuple[np.ndarray, np.ndarray]:
    """Vector matrix ``exp(i theta J_j)`` and spinor matrix ``exp(i theta Sigma_j / 2)``."""
    th = rp.angle
    g = 1j * ROTATION_GENERATORS[rp.axis]
    lam = np.eye(4) + math.sin(th) * g + (1.0 - math.cos(th)) * (g @ g)
    block = math.cos(th / 2) * ID2 + 1j * math.sin(th / 2) * pauli(rp.axis)
    return lam, block_diag(block, block)


def covariance_residual(lam: np.ndarray, spin: np.ndarray, gammas=None) -> float:
    """``max |Lambda^mu_nu gamma^nu - S^-1 gamma^mu S|`` over all mu."""
    if gammas is None:
        gammas = gamma_set_weyl_4d()[0]
    s_inv = np.linalg.inv(spin)
    worst = 0.0
    for mu in range(len(gammas)):
        lhs = sum(lam[mu, nu] * gammas[nu] for nu in range(len(gammas)))
        worst = max(worst, max_abs(lhs - s_inv @ gammas[mu] @ spin))
    return worst


def chirality_matrix(dims: str = "3+1") -> np.ndarray:
    if dims == "3+1":
        return np.array(gamma_set_weyl_4d()[1])
    if dims == "1+1":
        return np.array(SIGMA_Z)
    raise ValueError("dims must be '3+1' or '1+1'")


def chirality_project(psi, dims: str | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Split ``psi`` into its right- and left-chiral parts."""
    psi = np.asarray(psi, dtype=complex)
    if dims is None:
        dims = {4: "3+1", 2: "1+1"}.get(psi.shape[0])
        if dims is None:
            raise ValueError("psi must have 2 or 4 components")
    g5 = chirality_matrix(dims)
    eye = np.eye(g5.shape[0])
    return 0.5 * (eye + g5) @ psi, 0.5 * (eye - g5) @ psi


def helicity_spinor(direction, eigenvalue: int) -> np.ndarray:
    """Unit eigenvector of ``sigma . n`` for eigenvalue +-1.

    Takes the longer column of the projector ``(1 + s sigma.n)/2`` so that no
    direction (including n = -z) hits a vanishing denominator.
    """
    n = np.asarray(direction, dtype=float)
    n = n / np.linalg.norm(n)
    proj = 0.5 * (np.eye(2) + eigenvalue * (n[0] * SIGMA_X + n[1] * SIGMA_Y + n[2] * SIGMA_Z))
    col = proj[:, int(np.argmax(np.linalg.norm(proj, axis=0)))]
    return col / np.linalg.norm(col)


def _check_sign(value: int, name: str) -> int:
    if value not in (1, -1):
        raise ValueError(f"{name} must be +1 or -1")
    return int(value)


@dataclass(frozen=True, eq=False)
class PlaneWave3D:
    """Plane-wave Weyl spinor of type ``kind`` (1 or 2) with momentum ``p``.

    The amplitude solves the corresponding Weyl equation: for kind 1 it is the
    helicity eigenvector with eigenvalue ``sgn(E)``, for kind 2 with ``-sgn(E)``.
    """

    momentum: np.ndarray
    energy_sign: int
    kind: int
    amplitude: np.ndarray

    @classmethod
    def create(cls, momentum, energy_sign: int, kind: int) -> "PlaneWave3D":
        p = np.asarray(momentum, dtype=float)
        if p.shape != (3,) or not np.linalg.norm(p) > 0:
            raise ValueError("momentum must be a nonzero 3-vector")
        energy_sign = _check_sign(energy_sign, "energy_sign")
        if kind not in (1, 2):
            raise ValueError("kind must be 1 or 2")
        hel = energy_sign if kind == 1 else -energy_sign
        return cls(p, energy_sign, kind, helicity_spinor(p, hel))

    @property
    def direction(self) -> np.ndarray:
        return self.momentum / np.linalg.norm(self.momentum)

    def helicity_operator(self) -> np.ndarray:
        n = self.direction
        return n[0] * SIGMA_X + n[1] * SIGMA_Y + n[2] * SIGMA_Z

    def bispinor(self) -> np.ndarray:
        """Chiral embedding: ``(phi, 0)`` for kind 1, ``(0, phi)`` for kind 2."""
        out = np.zeros(4, dtype=complex)
        if self.kind == 1:
            out[:2] = self.amplitude
        else:
            out[2:] = self.amplitude
        return out


@dataclass(frozen=True)
class PlaneWave1D:
    """One-component plane wave; the Weyl equation ties ``sign(p)`` to kind and energy."""

    momentum: float
    energy_sign: int
    kind: int

    def __post_init__(self):
        if not (math.isfinite(self.momentum) and self.momentum != 0):
            raise ValueError("momentum must be nonzero")
        _check_sign(self.energy_sign, "energy_sign")
        if self.kind not in (1, 2):
            raise ValueError("kind must be 1 or 2")
        expected = self.energy_sign if self.kind == 1 else -self.energy_sign
        if math.copysign(1, self.momentum) != expected:
            raise ValueError(
                f"a kind-{self.kind} wave with energy sign {self.energy_sign} "
                f"needs momentum of sign {expected}"
            )

    @classmethod
    def from_energy(cls, kind: int, energy_sign: int, magnitude: float = 1.0) -> "PlaneWave1D":
        sign = energy_sign if kind == 1 else -energy_sign
        return cls(sign * abs(magnitude), energy_sign, kind)


def helicity_eigenvalue(pw: PlaneWave3D, tol: float = 1e-12) -> int:
    lam = pw.helicity_operator()
    image = lam @ pw.amplitude
    value = int(round(float(np.real(np.vdot(pw.amplitude, image)))))
    if max_abs(image - value * pw.amplitude) > tol:
        raise ArithmeticError("amplitude is not a helicity eigenvector")
    return value


def classical_velocity(pw: PlaneWave3D | PlaneWave1D):
    """``c^2 p / E`` in units of c: a unit 3-vector, or +-1 in one dimension."""
    if isinstance(pw, PlaneWave1D):
        return float(pw.energy_sign * math.copysign(1.0, pw.momentum))
    return pw.energy_sign * pw.direction


def spin_along_velocity(pw: PlaneWave3D) -> int:
    """Eigenvalue of ``sigma . v / c`` on the amplitude; independent of ``sgn(E)``."""
    v = classical_velocity(pw)
    op = v[0] * SIGMA_X + v[1] * SIGMA_Y + v[2] * SIGMA_Z
    image = op @ pw.amplitude
    value = int(round(float(np.real(np.vdot(pw.amplitude, image)))))
    if max_abs(image - value * pw.amplitude) > 1e-12:
        raise ArithmeticError("amplitude is not an eigenvector of sigma . v")
    return value


def reality_axis_classification() -> dict[int, bool]:
    """Axes whose Weyl equation admits real solutions: ``(i sigma_j)^* = -i sigma_j``."""
    return {j: bool(np.allclose(np.conj(1j * pauli(j)), -1j * pauli(j))) for j in (1, 2, 3)}
