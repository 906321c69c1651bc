"""Self-adjoint boundary-condition families on the interval ``[0, l]``.

Every two-component family is stored as a linear relation ``(L - U R) v = 0``
on the boundary 4-vector::

    v = (psi_top(l), psi_bottom(l), psi_top(0), psi_bottom(0))

``L v`` collects the "outgoing" combinations and ``R v`` the "incoming" ones,
so ``L v = U R v`` for a unitary ``U``. Each family is fixed by its two rows
of ``L`` and ``R``; two specs are compared through the 2-dimensional subspace
of boundary vectors they admit, which makes row scalings and reorderings
irrelevant.

The one-component 1D Weyl particle has a separate, single-phase family
(:class:`PhaseBC`).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import block_diag, subspace_angles

from .algebra import (
    REP_AXIS,
    SIGMA_X,
    SIGMA_Z,
    Rep,
    UnitaryParams,
    build_unitary,
    check_axis,
    check_finite,
    dagger,
    is_real_orthogonal,
    is_unitary,
    pauli,
    unitary_params,
)
from .representations import RepChange

SUBSPACE_TOL = 1e-10
UNITARY_TOL = 1e-12


def _rows(rows) -> np.ndarray:
    a = np.array(rows, dtype=complex)
    a.setflags(write=False)
    return a


# (L, R) for the axis-j Weyl operator; the 1D Dirac operator in a given
# representation uses the pairing of the axis its alpha matrix points along.
_PAIRINGS = {
    1: (
        _rows([[1, 1, 0, 0], [0, 0, 1, -1]]),
        _rows([[1, -1, 0, 0], [0, 0, 1, 1]]),
    ),
    2: (
        _rows([[1, -1j, 0, 0], [0, 0, -1j, 1]]),
        _rows([[-1j, 1, 0, 0], [0, 0, 1, -1j]]),
    ),
    3: (
        _rows([[1, 0, 0, 0], [0, 0, 0, 1]]),
        _rows([[0, 1, 0, 0], [0, 0, 1, 0]]),
    ),
}

# (top(0), bottom(l)) = W (top(l), bottom(0)) with W = (A3 sigma_x)^-1
_SWAPPED_AXIS3 = (
    _rows([[0, 0, 1, 0], [0, 1, 0, 0]]),
    _rows([[1, 0, 0, 0], [0, 0, 0, 1]]),
)


@dataclass(frozen=True, eq=False)
class BoundarySpec:
    """A boundary relation ``(L - U R) v = 0`` for the axis-``axis`` operator.

    ``rep`` is ``None`` for the Weyl-operator families and names the Dirac
    representation otherwise. ``params`` keeps the ``(mu, m)`` parameters when
    this member was built from them.
    """

    axis: int
    U: np.ndarray
    L: np.ndarray
    R: np.ndarray
    rep: Rep | None = None
    params: UnitaryParams | None = None

    def __post_init__(self):
        check_axis(self.axis)
        u = check_finite(self.U, "U").copy()
        L = check_finite(self.L, "L").copy()
        R = check_finite(self.R, "R").copy()
        if u.shape != (2, 2) or L.shape != (2, 4) or R.shape != (2, 4):
            raise ValueError("expected U 2x2, L and R 2x4")
        if not is_unitary(u, UNITARY_TOL):
            raise ValueError("boundary matrix U is not unitary")
        s = np.linalg.svd(L - u @ R, compute_uv=False)
        if s[-1] <= SUBSPACE_TOL * max(1.0, s[0]):
            raise ValueError("boundary relation does not have rank 2")
        for name, arr in (("U", u), ("L", L), ("R", R)):
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @property
    def relation(self) -> np.ndarray:
        return self.L - self.U @ self.R

    def subspace(self) -> np.ndarray:
        """Orthonormal 4x2 basis of the admitted boundary vectors."""
        _, _, vh = np.linalg.svd(self.relation)
        return dagger(vh[2:])

    def residual(self, v) -> np.ndarray:
        return self.relation @ np.asarray(v, dtype=complex)


def _as_unitary(A) -> tuple[np.ndarray, UnitaryParams | None]:
    if isinstance(A, UnitaryParams):
        return build_unitary(A), A
    A = check_finite(A, "A")
    if A.shape != (2, 2) or not is_unitary(A, UNITARY_TOL):
        raise ValueError("boundary matrix must be a 2x2 unitary")
    return A, None


def bc_weyl_axis(j: int, A) -> BoundarySpec:
    """Family member for the Weyl operator ``-i sigma_j d/dx_j``.

    ``A`` is a 2x2 unitary or a :class:`UnitaryParams`.
    """
    j = check_axis(j)
    u, params = _as_unitary(A)
    L, R = _PAIRINGS[j]
    return BoundarySpec(j, u, L, R, None, params)


def bc_dirac_rep(rep: Rep | str, U) -> BoundarySpec:
    """Family member for the 1D Dirac operator written in ``rep``.

    Dirac and Majorana share one pairing (their ``alpha`` is sigma_x); the
    Weyl representation uses the axis-3 pairing and Jackiw-Rebbi the axis-2 one.
    """
    rep = Rep.parse(rep)
    axis = REP_AXIS[rep]
    u, params = _as_unitary(U)
    L, R = _PAIRINGS[axis]
    return BoundarySpec(axis, u, L, R, rep, params)


def bc_weyl_axis3_swapped(W) -> BoundarySpec:
    """Axis-3 family written as ``(top(0), bottom(l)) = W (top(l), bottom(0))``.

    The ordinary encoding with ``A3`` corresponds to ``W = (A3 sigma_x)^-1``.
    """
    w, _ = _as_unitary(W)
    L, R = _SWAPPED_AXIS3
    return BoundarySpec(3, w, L, R)


def bc_via_transform(base_U, change: RepChange) -> BoundarySpec:
    """Pull the Weyl-representation family back to ``change.source``.

    The Weyl-representation boundary values are replaced by ``S`` applied to
    the source-representation values at each wall; no simplification is
    applied, so ``L`` and ``R`` generally differ from the canonical rows of the
    source family (see :func:`canonical_unitary`).
    """
    if change.target is not Rep.WEYL:
        raise ValueError("the change must map into the Weyl representation")
    u, params = _as_unitary(base_U)
    L3, R3 = _PAIRINGS[3]
    both_walls = block_diag(change.S, change.S)
    return BoundarySpec(
        REP_AXIS[change.source], u, L3 @ both_walls, R3 @ both_walls, change.source, params
    )


def transported_unitary(rep: Rep | str, U) -> np.ndarray:
    """Unitary that ``bc_dirac_rep(rep, .)`` needs to match ``bc_via_transform(U, .)``.

    For Dirac and Jackiw-Rebbi the transported family keeps the same ``U``.
    The Majorana change ``S`` carries the canonical axis-1 combinations into
    the axis-3 ones only up to wall-dependent phases, which appear here as
    ``diag(1, -i) U diag(i, 1)``.
    """
    rep = Rep.parse(rep)
    u, _ = _as_unitary(U)
    if rep is Rep.MAJORANA:
        return np.diag([1.0, -1j]) @ u @ np.diag([1j, 1.0])
    return np.array(u)


def canonical_pairing(spec: BoundarySpec) -> tuple[np.ndarray, np.ndarray]:
    axis = REP_AXIS[spec.rep] if spec.rep is not None else spec.axis
    return _PAIRINGS[axis]


def canonical_unitary(spec: BoundarySpec) -> np.ndarray:
    """Unitary of the same subspace written with the canonical ``L, R`` rows.

    Writes ``L = [P Q] M`` and ``R = [P' Q'] M`` with ``M`` the stacked
    canonical rows, then solves ``(P - U P') out + (Q - U Q') in = 0`` for
    ``out`` in terms of ``in``.
    """
    Lc, Rc = canonical_pairing(spec)
    m_inv = np.linalg.inv(np.vstack([Lc, Rc]))
    lp = spec.L @ m_inv
    rp = spec.R @ m_inv
    a = lp[:, :2] - spec.U @ rp[:, :2]
    b = lp[:, 2:] - spec.U @ rp[:, 2:]
    if np.linalg.cond(a) > 1e10:
        raise ValueError("spec cannot be written with the canonical pairing")
    return -np.linalg.solve(a, b)


def bc_equivalent(b1: BoundarySpec, b2: BoundarySpec, tol: float = SUBSPACE_TOL) -> bool:
    """True when both specs admit the same boundary subspace.

    Compares through the largest principal angle between the two 2-planes.
    """
    if b1.axis != b2.axis:
        raise ValueError("specs belong to different operators")
    return largest_principal_angle(b1, b2) <= tol


def largest_principal_angle(b1: BoundarySpec, b2: BoundarySpec) -> float:
    return float(np.max(subspace_angles(b1.subspace(), b2.subspace())))


def mit_bag_matrix() -> np.ndarray:
    """The swapped-form matrix ``-i sigma_x`` selecting the MIT bag condition."""
    return -1j * np.array(SIGMA_X)


def mit_bag_spec() -> BoundarySpec:
    """Axis-3 member with ``A3 = i 1``: ``top = -i bottom`` at 0, ``top = i bottom`` at l."""
    return bc_weyl_axis(3, UnitaryParams(math.pi / 2, 1.0, 0.0, 0.0, 0.0))


def mit_bag_anticommutator() -> np.ndarray:
    """``W alpha + alpha W`` for ``W = -i sigma_x`` and ``alpha = sigma_z``; zero."""
    w = mit_bag_matrix()
    return w @ SIGMA_Z + SIGMA_Z @ w


def boundary_term(psi, chi, j: int) -> complex:
    """``[psi^dagger sigma_j chi]`` evaluated at ``l`` minus the same at 0."""
    sigma = pauli(j)
    psi = np.asarray(psi, dtype=complex)
    chi = np.asarray(chi, dtype=complex)
    at_l = np.conj(psi[:2]) @ sigma @ chi[:2]
    at_0 = np.conj(psi[2:]) @ sigma @ chi[2:]
    return complex(at_l - at_0)


class Confinement(enum.Enum):
    CONFINING = "confining"
    NON_CONFINING = "non-confining"


@dataclass(frozen=True)
class ConfinementClass:
    label: Confinement
    wall_current_norms: tuple[float, float]  # (at 0, at l)
    imbalance: float  # |J(l) - J(0)| form norm; zero for self-adjoint specs

    @property
    def confining(self) -> bool:
        return self.label is Confinement.CONFINING


def wall_current_forms(spec: BoundarySpec) -> tuple[np.ndarray, np.ndarray]:
    """Hermitian forms ``v -> v^dagger sigma_j v`` at each wall, on the subspace."""
    basis = spec.subspace()
    sigma = pauli(spec.axis)
    at_l = dagger(basis[:2]) @ sigma @ basis[:2]
    at_0 = dagger(basis[2:]) @ sigma @ basis[2:]
    return at_0, at_l


def classify_confinement(spec: BoundarySpec, tol: float = SUBSPACE_TOL) -> ConfinementClass:
    at_0, at_l = wall_current_forms(spec)
    n0 = float(np.linalg.norm(at_0, 2))
    nl = float(np.linalg.norm(at_l, 2))
    imbalance = float(np.linalg.norm(at_l - at_0, 2))
    label = Confinement.CONFINING if max(n0, nl) <= tol else Confinement.NON_CONFINING
    return ConfinementClass(label, (n0, nl), imbalance)


def reality_admissible(spec: BoundarySpec, tol: float = UNITARY_TOL) -> bool:
    """Whether the family member can carry real-valued solutions.

    Axes 1 and 3 need a real orthogonal boundary matrix; the axis-2 equation
    has no real solutions at all.
    """
    if spec.axis == 2:
        return False
    return is_real_orthogonal(spec.U, tol)


@dataclass(frozen=True)
class PhaseBC:
    """``phi(l) = exp(i eta) phi(0)`` for the one-component 1D Weyl particle."""

    eta: float

    def __post_init__(self):
        if not (math.isfinite(self.eta) and 0.0 <= self.eta < 2 * math.pi):
            raise ValueError(f"eta must lie in [0, 2 pi), got {self.eta!r}")

    @property
    def phase(self) -> complex:
        return complex(np.exp(1j * self.eta))

    @property
    def reality_admissible(self) -> bool:
        return abs(math.sin(self.eta)) <= 1e-12

    @property
    def name(self) -> str:
        if self.eta == 0.0:
            return "periodic"
        if self.eta == math.pi:
            return "antiperiodic"
        return "twisted"

    def residual(self, phi_0: complex, phi_l: complex) -> complex:
        return complex(phi_l - self.phase * phi_0)

    @staticmethod
    def boundary_term(psi_0, psi_l, chi_0, chi_l) -> complex:
        return complex(np.conj(psi_l) * chi_l - np.conj(psi_0) * chi_0)


def bc_1d_weyl(eta: float) -> PhaseBC:
    return PhaseBC(float(eta))


# key=value records ------------------------------------------------------

RECORD_KEYS = ("axis", "rep", "mu", "m0", "m1", "m2", "m3")


def _has_canonical_rows(spec: BoundarySpec) -> bool:
    Lc, Rc = canonical_pairing(spec)
    return np.array_equal(spec.L, Lc) and np.array_equal(spec.R, Rc)


def to_record(spec: BoundarySpec) -> dict:
    """Flat ``{axis, rep, mu, m0..m3}`` record of the canonical-form unitary."""
    if not _has_canonical_rows(spec):
        params = unitary_params(canonical_unitary(spec))
    elif spec.params is not None:
        params = spec.params
    else:
        params = unitary_params(spec.U)
    return {
        "axis": spec.axis,
        "rep": spec.rep.value if spec.rep is not None else "none",
        "mu": params.mu,
        "m0": params.m0,
        "m1": params.m1,
        "m2": params.m2,
        "m3": params.m3,
    }


def from_record(record: dict) -> BoundarySpec:
    params = UnitaryParams(*(float(record[k]) for k in ("mu", "m0", "m1", "m2", "m3")))
    rep = str(record.get("rep", "none")).strip().lower()
    if rep in ("", "none"):
        return bc_weyl_axis(int(record["axis"]), params)
    spec = bc_dirac_rep(rep, params)
    if "axis" in record and int(record["axis"]) != spec.axis:
        raise ValueError(f"axis {record['axis']} does not match representation {rep}")
    return spec


def format_record(record: dict) -> str:
    lines = []
    for key in RECORD_KEYS:
        value = record[key]
        lines.append(f"{key}={value!r}" if isinstance(value, float) else f"{key}={value}")
    return "\n".join(lines) + "\n"


def parse_record(text: str) -> dict:
    record = {}
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ValueError(f"malformed line {line!r}")
        record[key.strip()] = value.strip()
    return record
