"""Time evolution in a computed eigenbasis, with conservation diagnostics."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import check_axis, pauli
from .spectral import (
    SampledSpinor,
    SpectralProblem,
    Weyl1DProblem,
    eigenfunction,
    eigenfunction_1d_weyl,
    find_spectrum,
    uniform_grid,
)

MIN_CAPTURED_NORM = 0.99
MIN_DIAGNOSTIC_POINTS = 16
WEYL1D = "weyl1d"


class TruncationError(RuntimeError):
    """The basis captures too little of the initial state."""


@dataclass(frozen=True)
class Mode:
    energy: float
    state: SampledSpinor


def spectral_basis(prob: SpectralProblem, k_window, n_points: int) -> list[Mode]:
    modes = []
    for pair in find_spectrum(prob, k_window):
        for st in eigenfunction(prob, pair, n_points):
            modes.append(Mode(pair.energy, st))
    return modes


def weyl1d_basis(prob: Weyl1DProblem, n_range, n_points: int) -> list[Mode]:
    n_min, n_max = map(int, n_range)
    return [
        Mode(prob.energy_sign * prob.wavenumber(n), eigenfunction_1d_weyl(prob, n, n_points))
        for n in range(n_min, n_max + 1)
    ]


def expand_initial(psi0: SampledSpinor, basis: list[Mode]) -> tuple[np.ndarray, float]:
    """Coefficients ``<psi_n, psi0>`` and the captured norm ``sum |c_n|^2``."""
    if not basis:
        raise ValueError("basis is empty")
    coeffs = np.array([m.state.inner(psi0) for m in basis])
    return coeffs, float(np.sum(np.abs(coeffs) ** 2))


@dataclass(frozen=True, eq=False)
class EvolutionRun:
    problem: SpectralProblem | Weyl1DProblem
    basis: tuple[Mode, ...]
    coefficients: np.ndarray
    captured_norm: float

    @classmethod
    def create(cls, problem, psi0: SampledSpinor, basis, *, force: bool = False) -> "EvolutionRun":
        """Expand ``psi0``; refuse unless the basis captures 99% of its norm."""
        coeffs, captured = expand_initial(psi0, list(basis))
        if captured > 1 + 1e-6:
            raise ValueError(
                f"captured norm {captured:.9f} exceeds 1; basis is not orthonormal "
                "or psi0 is not normalized"
            )
        if captured < MIN_CAPTURED_NORM and not force:
            raise TruncationError(
                f"basis captures only {captured:.6f} of the initial norm; "
                "widen the window or pass force=True"
            )
        return cls(problem, tuple(basis), coeffs, captured)

    @property
    def energies(self) -> np.ndarray:
        return np.array([m.energy for m in self.basis])

    @property
    def grid(self) -> np.ndarray:
        return self.basis[0].state.grid

    @property
    def diagnostic_axis(self):
        return WEYL1D if isinstance(self.problem, Weyl1DProblem) else self.problem.axis


def evolve(run: EvolutionRun, t: float) -> SampledSpinor:
    """``sum_n c_n exp(-i E_n t) psi_n`` on the basis grid."""
    weights = run.coefficients * np.exp(-1j * run.energies * t)
    stack = np.stack([m.state.values for m in run.basis])
    return SampledSpinor(run.grid, np.tensordot(weights, stack, axes=1))


def gaussian_spinor(
    length: float,
    n_points: int,
    center: float,
    width: float,
    components=(1.0, 1.0),
    wavenumber: float = 0.0,
) -> SampledSpinor:
    """Normalized Gaussian envelope times a fixed component vector.

    ``components`` of length 1 gives a one-component state.
    """
    grid = uniform_grid(length, n_points)
    env = np.exp(-0.5 * ((grid - center) / width) ** 2 + 1j * wavenumber * grid)
    comps = np.asarray(components, dtype=complex)
    return SampledSpinor(grid, env[:, None] * comps[None, :]).normalize()


def wall_currents(state: SampledSpinor, axis, particle_type: int = 1) -> tuple[float, float]:
    """Probability current at ``x = 0`` and ``x = l`` (units of c).

    Two-component states use ``psi^dagger sigma_j psi``; the one-component 1D
    Weyl state uses ``(-1)^(a-1) |phi|^2``.
    """
    if axis == WEYL1D:
        sign = 1 if particle_type == 1 else -1
        rho = state.density()
        return sign * float(rho[0]), sign * float(rho[-1])
    sigma = pauli(check_axis(axis))
    at = lambda v: float(np.real(np.conj(v) @ sigma @ v))  # noqa: E731
    return at(state.values[0]), at(state.values[-1])


def continuity_residual(
    before: SampledSpinor, after: SampledSpinor, now: SampledSpinor, dt: float, particle_type: int = 1
) -> float:
    """``max |d rho/dt + (-1)^(a-1) d rho/dx|`` over interior points, by central differences."""
    sign = 1 if particle_type == 1 else -1
    rho = now.density()
    drho_dt = (after.density() - before.density()) / (2 * dt)
    drho_dx = (rho[2:] - rho[:-2]) / (2 * now.spacing)
    return float(np.max(np.abs(drho_dt[1:-1] + sign * drho_dx)))


def diagnostics(
    state: SampledSpinor,
    axis,
    *,
    particle_type: int = 1,
    neighbors: tuple[SampledSpinor, SampledSpinor] | None = None,
    dt: float | None = None,
) -> dict:
    """Norm, wall currents and (1D Weyl only) the continuity residual.

    ``neighbors`` are the states at ``t - dt`` and ``t + dt``; without them the
    residual is reported as None.
    """
    if state.grid.size < MIN_DIAGNOSTIC_POINTS:
        raise ValueError(f"grid needs at least {MIN_DIAGNOSTIC_POINTS} points")
    j0, jl = wall_currents(state, axis, particle_type)
    residual = None
    if axis == WEYL1D and neighbors is not None:
        if dt is None or not dt > 0:
            raise ValueError("dt must be positive when neighbors are given")
        residual = continuity_residual(neighbors[0], neighbors[1], state, dt, particle_type)
    return {"norm": state.norm(), "J0": j0, "Jl": jl, "continuity_residual": residual}


def time_series(run: EvolutionRun, times) -> list[dict]:
    """Diagnostics rows ``t, norm, J0, Jl, continuity_residual``.

    For the 1D Weyl particle the time derivative uses ``dt = h / 2`` with ``h``
    the grid spacing, so the residual is second order in ``h``.
    """
    axis = run.diagnostic_axis
    a = run.problem.particle_type
    dt = 0.5 * run.basis[0].state.spacing
    rows = []
    for t in times:
        state = evolve(run, t)
        neighbors = (evolve(run, t - dt), evolve(run, t + dt)) if axis == WEYL1D else None
        row = diagnostics(state, axis, particle_type=a, neighbors=neighbors, dt=dt)
        rows.append({"t": float(t), **row})
    return rows


def l2_distance(a: SampledSpinor, b: SampledSpinor) -> float:
    diff = SampledSpinor(a.grid, a.values - b.values)
    return diff.norm()
