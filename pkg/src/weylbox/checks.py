"""Reduced invariant suite behind the ``check`` command.

Each check draws from a seeded generator, so repeated runs print the same
numbers. Sample counts are small; the test suite runs the full versions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import (
    SIGMA_X,
    Rep,
    gamma_pair,
    gamma_set_weyl_4d,
    max_abs,
    random_unitary,
    verify_clifford_2d,
)
from .boundary import (
    PhaseBC,
    bc_dirac_rep,
    bc_equivalent,
    bc_via_transform,
    bc_weyl_axis,
    bc_weyl_axis3_swapped,
    boundary_term,
    classify_confinement,
    mit_bag_anticommutator,
    mit_bag_spec,
    transported_unitary,
)
from .dynamics import EvolutionRun, gaussian_spinor, time_series, weyl1d_basis
from .kinematics import (
    BoostParams,
    PlaneWave3D,
    RotationParams,
    boost_1d,
    boost_4d,
    covariance_residual,
    helicity_eigenvalue,
    rotation_4d,
)
from .representations import rep_change_matrix
from .spectral import SpectralProblem, Weyl1DProblem, find_spectrum


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    value: float
    limit: float


def _result(name: str, value: float, limit: float) -> CheckResult:
    return CheckResult(name, bool(value <= limit), float(value), float(limit))


def check_clifford() -> CheckResult:
    bad = sum(not verify_clifford_2d(*gamma_pair(r)) for r in Rep)
    return _result("clifford-2d", float(bad), 0.0)


def check_self_adjoint(rng, n: int) -> CheckResult:
    worst = 0.0
    for _ in range(n):
        j = int(rng.integers(1, 4))
        spec = bc_weyl_axis(j, random_unitary(rng))
        basis = spec.subspace()
        coeffs = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        psi, chi = (basis @ coeffs).T
        worst = max(worst, abs(boundary_term(psi, chi, j)))
    return _result("self-adjoint boundary term", worst, 1e-10)


def check_transport(rng, n: int) -> CheckResult:
    worst = 0.0
    for _ in range(n):
        u = random_unitary(rng)
        for rep in (Rep.DIRAC, Rep.MAJORANA, Rep.JACKIW_REBBI):
            moved = bc_via_transform(u, rep_change_matrix(rep, Rep.WEYL))
            direct = bc_dirac_rep(rep, transported_unitary(rep, u))
            worst = max(worst, 0.0 if bc_equivalent(moved, direct) else 1.0)
    return _result("representation transport", worst, 0.0)


def check_swapped_encoding(rng, n: int) -> CheckResult:
    worst = 0.0
    for _ in range(n):
        a3 = random_unitary(rng)
        same = bc_equivalent(bc_weyl_axis(3, a3), bc_weyl_axis3_swapped(np.linalg.inv(a3 @ SIGMA_X)))
        worst = max(worst, 0.0 if same else 1.0)
    worst = max(worst, max_abs(mit_bag_anticommutator()))
    return _result("swapped axis-3 encoding", worst, 1e-14)


def check_spectra() -> CheckResult:
    cases = [
        (bc_weyl_axis(3, SIGMA_X), (-7.0, 7.0), [-2 * math.pi, 0.0, 2 * math.pi]),
        (mit_bag_spec(), (0.0, 8.0), [math.pi / 2, 3 * math.pi / 2, 5 * math.pi / 2]),
    ]
    worst = 0.0
    for spec, window, expected in cases:
        ks = [p.k for p in find_spectrum(SpectralProblem(spec.axis, spec), window)]
        if len(ks) != len(expected):
            return _result("closed-form spectra", math.inf, 1e-8)
        worst = max(worst, max(abs(a - b) for a, b in zip(ks, expected)))
    return _result("closed-form spectra", worst, 1e-8)


def check_confinement() -> CheckResult:
    confining = [bc_weyl_axis(1, -np.eye(2)), bc_weyl_axis(1, np.eye(2)), mit_bag_spec()]
    open_ = [bc_weyl_axis(3, SIGMA_X), bc_weyl_axis(3, -SIGMA_X)]
    wrong = sum(not classify_confinement(s).confining for s in confining)
    wrong += sum(classify_confinement(s).confining for s in open_)
    return _result("confinement classes", float(wrong), 0.0)


def check_kinematics(rng, n: int) -> CheckResult:
    worst = 0.0
    for _ in range(n):
        j = int(rng.integers(1, 4))
        worst = max(worst, covariance_residual(*boost_4d(BoostParams(j, rng.uniform(-3, 3)))))
        worst = max(worst, covariance_residual(*rotation_4d(RotationParams(j, rng.uniform(-7, 7)))))
    _, s1, s2 = boost_1d(rng.uniform(-3, 3))
    worst = max(worst, abs(s1 * s2 - 1.0))
    _, spin = rotation_4d(RotationParams(3, 2 * math.pi))
    worst = max(worst, max_abs(spin + np.eye(4)))
    g5 = gamma_set_weyl_4d()[1]
    _, spin = boost_4d(BoostParams(2, 0.4))
    worst = max(worst, max_abs(spin @ g5 - g5 @ spin))
    return _result("Lorentz covariance", worst, 1e-10)


def check_helicity(rng) -> CheckResult:
    table = {(1, 1): 1, (1, -1): -1, (2, 1): -1, (2, -1): 1}
    wrong = 0
    p = rng.normal(size=3)
    for (kind, sign), expected in table.items():
        wrong += helicity_eigenvalue(PlaneWave3D.create(p, sign, kind)) != expected
    return _result("helicity table", float(wrong), 0.0)


def check_dynamics() -> CheckResult:
    prob = Weyl1DProblem(PhaseBC(0.0))
    psi0 = gaussian_spinor(1.0, 512, 0.5, 0.05, (1.0,))
    run = EvolutionRun.create(prob, psi0, weyl1d_basis(prob, (-32, 31), 512))
    rows = time_series(run, np.linspace(0.0, 10.0, 5))
    drift = max(abs(r["norm"] - rows[0]["norm"]) for r in rows)
    return _result("norm conservation", drift, 1e-9)


def run_checks(seed: int = 0, samples: int = 50) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    return [
        check_clifford(),
        check_self_adjoint(rng, samples),
        check_transport(rng, samples),
        check_swapped_encoding(rng, samples),
        check_spectra(),
        check_confinement(),
        check_kinematics(rng, samples),
        check_helicity(rng),
        check_dynamics(),
    ]
