"""Spectra and eigenfunctions of ``-i (-1)^(a-1) sigma_j d/dx`` on ``[0, l]``.

Natural units (hbar = c = 1). A solution at wavenumber ``k`` is

    psi(x) = A u_plus exp(i k x) + B u_minus exp(-i k x),  sigma_j u_pm = pm u_pm,

which has energy ``(-1)^(a-1) k``. Imposing the boundary relation gives a 2x2
matrix ``M(k)`` acting on ``(A, B)``; the spectrum is the set of real ``k``
where ``M(k)`` is singular. ``det M`` is complex, so roots are located on the
smallest singular value instead: a coarse scan brackets local minima, golden
section shrinks each bracket, and a minimum counts as a root only if it
reaches ``ROOT_TOL``.

The one-component 1D Weyl particle has the closed-form spectrum
``E_n = (-1)^(a-1) (eta + 2 pi n) / l``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import trapezoid

from .algebra import check_axis, pauli
from .boundary import BoundarySpec, PhaseBC

ROOT_TOL = 1e-10
DEGENERACY_TOL = 1e-8
GOLDEN_WIDTH = 1e-12
SCAN_DIVISIONS = 32  # scan step is pi / (SCAN_DIVISIONS * l)
CONTINUUM_FRACTION = 0.5
ORACLE_STEPS = 2000

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


class ConsistencyError(RuntimeError):
    """An eigenpair no longer solves the problem it is used with."""


class ContinuumFamilyError(RuntimeError):
    """``M(k)`` is singular on most of the scan; the spectrum is not discrete."""


class NumericError(RuntimeError):
    pass


# sigma_j u_pm = pm u_pm; columns are (u_plus, u_minus)
_EIGENVECTORS = {
    1: np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2.0),
    2: np.array([[1, 1], [1j, -1j]], dtype=complex) / math.sqrt(2.0),
    3: np.eye(2, dtype=complex),
}


@dataclass(frozen=True)
class SpectralProblem:
    axis: int
    bc: BoundarySpec
    length: float = 1.0
    particle_type: int = 1

    def __post_init__(self):
        check_axis(self.axis)
        if not self.length > 0:
            raise ValueError("length must be positive")
        if self.bc.axis != self.axis:
            raise ValueError(f"boundary spec is for axis {self.bc.axis}, not {self.axis}")
        if self.particle_type not in (1, 2):
            raise ValueError("particle_type must be 1 or 2")

    @property
    def energy_sign(self) -> int:
        return 1 if self.particle_type == 1 else -1


@dataclass(frozen=True, eq=False)
class EigenPair:
    k: float
    energy: float
    coefficients: np.ndarray  # (degeneracy, 2) amplitudes (A, B)
    degeneracy: int
    sigma_min: float


@dataclass(frozen=True, eq=False)
class SampledSpinor:
    """Complex samples on a uniform grid over ``[0, l]``.

    ``values`` has shape ``(N, ncomp)`` with ``ncomp`` 2 for spinors and 1 for
    the one-component 1D Weyl wave function.
    """

    grid: np.ndarray
    values: np.ndarray
    normalized: bool = False

    def __post_init__(self):
        grid = np.asarray(self.grid, dtype=float)
        values = np.asarray(self.values, dtype=complex)
        if values.ndim == 1:
            values = values[:, None]
        if grid.ndim != 1 or values.shape[0] != grid.size:
            raise ValueError("grid and values disagree in length")
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "values", values)
        if self.normalized and abs(self.norm() - 1.0) > 1e-8:
            raise ValueError("state flagged normalized but its norm is not 1")

    @property
    def n_components(self) -> int:
        return self.values.shape[1]

    @property
    def spacing(self) -> float:
        return float(self.grid[1] - self.grid[0])

    def density(self) -> np.ndarray:
        return np.sum(np.abs(self.values) ** 2, axis=1)

    def inner(self, other: "SampledSpinor") -> complex:
        """Trapezoidal ``<self, other>``."""
        integrand = np.sum(np.conj(self.values) * other.values, axis=1)
        return complex(trapezoid(integrand, self.grid))

    def norm(self) -> float:
        return math.sqrt(max(trapezoid(self.density(), self.grid), 0.0))

    def normalize(self) -> "SampledSpinor":
        return SampledSpinor(self.grid, self.values / self.norm(), True)

    def conj(self) -> "SampledSpinor":
        return SampledSpinor(self.grid, np.conj(self.values), self.normalized)

    def boundary_vector(self) -> np.ndarray:
        """``(top(l), bottom(l), top(0), bottom(0))`` for two-component states."""
        if self.n_components != 2:
            raise ValueError("boundary 4-vector needs a two-component state")
        return np.concatenate([self.values[-1], self.values[0]])


def uniform_grid(length: float, n_points: int) -> np.ndarray:
    if n_points < 2:
        raise ValueError("need at least two grid points")
    return np.linspace(0.0, length, n_points)


def _boundary_maps(prob: SpectralProblem, ks: np.ndarray) -> np.ndarray:
    """W(k): (A, B) -> boundary 4-vector, stacked over ``ks``; shape (n, 4, 2)."""
    u = _EIGENVECTORS[prob.axis]
    phase = np.exp(1j * ks * prob.length)
    w = np.empty(ks.shape + (4, 2), dtype=complex)
    w[..., 0:2, 0] = phase[:, None] * u[:, 0]
    w[..., 0:2, 1] = np.conj(phase)[:, None] * u[:, 1]
    w[..., 2:4, 0] = u[:, 0]
    w[..., 2:4, 1] = u[:, 1]
    return w


def _boundary_matrices(prob: SpectralProblem, ks) -> np.ndarray:
    ks = np.atleast_1d(np.asarray(ks, dtype=float))
    return prob.bc.relation @ _boundary_maps(prob, ks)


def boundary_matrix(prob: SpectralProblem, k: float) -> np.ndarray:
    if not math.isfinite(k):
        raise ValueError("k must be finite")
    return _boundary_matrices(prob, [k])[0]


def singular_values(prob: SpectralProblem, ks) -> np.ndarray:
    """Singular values of ``M(k)`` in descending order, shape ``(n, 2)``."""
    return np.linalg.svd(_boundary_matrices(prob, ks), compute_uv=False)


def _sigma_min(prob: SpectralProblem, k: float) -> float:
    return float(singular_values(prob, [k])[0, -1])


def _golden_section(f, a: float, b: float, width: float) -> float:
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > width:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
    return 0.5 * (a + b)


def scan_step(length: float) -> float:
    return math.pi / (SCAN_DIVISIONS * length)


def find_spectrum(
    prob: SpectralProblem,
    k_window: tuple[float, float],
    *,
    step: float | None = None,
) -> list[EigenPair]:
    """All eigenvalues with ``k`` in ``k_window``, sorted by ``k``.

    Raises:
        ContinuumFamilyError: if ``M(k)`` is singular on more than half of the
            scan points.
    """
    k_min, k_max = map(float, k_window)
    if not k_min < k_max:
        raise ValueError("k_window must satisfy k_min < k_max")
    step = scan_step(prob.length) if step is None else step
    if k_max - k_min < step:
        return []
    n = int(math.ceil((k_max - k_min) / step)) + 1
    ks = np.linspace(k_min, k_max, n)
    s = singular_values(prob, ks)[:, -1]
    if np.mean(s < ROOT_TOL) > CONTINUUM_FRACTION:
        raise ContinuumFamilyError(
            "boundary matrix is singular across the scan; no discrete spectrum"
        )

    brackets = []
    for i in range(n):
        left = s[i - 1] if i > 0 else np.inf
        right = s[i + 1] if i < n - 1 else np.inf
        if s[i] <= left and s[i] < right:
            brackets.append((ks[max(i - 1, 0)], ks[min(i + 1, n - 1)]))

    roots: list[float] = []
    f = lambda k: _sigma_min(prob, k)  # noqa: E731
    for a, b in brackets:
        k = _golden_section(f, a, b, GOLDEN_WIDTH)
        if f(k) <= ROOT_TOL and not any(abs(k - r) < 1e-9 for r in roots):
            roots.append(k)
    return [_eigenpair(prob, k) for k in sorted(roots)]


def _eigenpair(prob: SpectralProblem, k: float) -> EigenPair:
    _, s, vh = np.linalg.svd(boundary_matrix(prob, k))
    degeneracy = int(np.sum(s <= DEGENERACY_TOL))
    degeneracy = max(degeneracy, 1)
    coeffs = np.conj(vh[2 - degeneracy:])
    return EigenPair(k, prob.energy_sign * k, coeffs, degeneracy, float(s[-1]))


def _sample(prob: SpectralProblem, k: float, coeff: np.ndarray, grid: np.ndarray) -> np.ndarray:
    u = _EIGENVECTORS[prob.axis]
    return (
        coeff[0] * np.exp(1j * k * grid)[:, None] * u[:, 0]
        + coeff[1] * np.exp(-1j * k * grid)[:, None] * u[:, 1]
    )


def eigenfunction(prob: SpectralProblem, pair: EigenPair, n_points: int) -> list[SampledSpinor]:
    """Sampled, trapezoid-orthonormal eigenfunctions for ``pair``.

    Returns one state per degenerate branch (so two for a doubly degenerate k).

    Raises:
        ConsistencyError: if ``pair.k`` is not a root of ``prob``.
    """
    sigma = _sigma_min(prob, pair.k)
    if sigma > ROOT_TOL:
        raise ConsistencyError(
            f"k = {pair.k!r} is not an eigenvalue of this problem (sigma_min = {sigma:.3e})"
        )
    grid = uniform_grid(prob.length, n_points)
    states: list[SampledSpinor] = []
    for coeff in pair.coefficients:
        vals = _sample(prob, pair.k, coeff, grid)
        st = SampledSpinor(grid, vals)
        for prev in states:
            vals = vals - prev.inner(st) * prev.values
            st = SampledSpinor(grid, vals)
        states.append(st.normalize())
    return states


def shooting_oracle(prob: SpectralProblem, k: float, n_steps: int = ORACLE_STEPS) -> float:
    """Smallest singular value of the boundary map built by integrating the ODE.

    Integrates ``psi' = i k sigma_j psi`` across the interval with fixed-step
    RK4 from the two unit initial vectors, so it never touches the plane-wave
    ansatz. Both bases are orthonormal at ``x = 0``, so the singular values
    agree with :func:`boundary_matrix` wherever the integration is accurate.
    """
    if not math.isfinite(k):
        raise ValueError("k must be finite")
    h = prob.length / n_steps
    if not h > 1e-300 or prob.length + h == prob.length:
        raise NumericError("integration step underflows")
    gen = 1j * k * pauli(prob.axis)
    psi = np.eye(2, dtype=complex)  # columns are the two solutions
    for _ in range(n_steps):
        k1 = gen @ psi
        k2 = gen @ (psi + 0.5 * h * k1)
        k3 = gen @ (psi + 0.5 * h * k2)
        k4 = gen @ (psi + h * k3)
        psi = psi + (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
    w = np.vstack([psi, np.eye(2)])
    return float(np.linalg.svd(prob.bc.relation @ w, compute_uv=False)[-1])


# one-component 1D Weyl particle ----------------------------------------


@dataclass(frozen=True)
class Weyl1DProblem:
    bc: PhaseBC
    length: float = 1.0
    particle_type: int = 1

    def __post_init__(self):
        if not self.length > 0:
            raise ValueError("length must be positive")
        if self.particle_type not in (1, 2):
            raise ValueError("particle_type must be 1 or 2")

    @property
    def energy_sign(self) -> int:
        return 1 if self.particle_type == 1 else -1

    def wavenumber(self, n: int) -> float:
        return (self.bc.eta + 2 * math.pi * n) / self.length


def spectrum_1d_weyl(
    a: int, eta: float, length: float, n_range: tuple[int, int]
) -> list[tuple[int, float]]:
    """``(n, E_n)`` for ``n_min <= n <= n_max``."""
    prob = Weyl1DProblem(PhaseBC(float(eta)), float(length), int(a))
    n_min, n_max = map(int, n_range)
    return [(n, prob.energy_sign * prob.wavenumber(n)) for n in range(n_min, n_max + 1)]


def eigenfunction_1d_weyl(prob: Weyl1DProblem, n: int, n_points: int) -> SampledSpinor:
    grid = uniform_grid(prob.length, n_points)
    vals = np.exp(1j * prob.wavenumber(n) * grid) / math.sqrt(prob.length)
    return SampledSpinor(grid, vals)
