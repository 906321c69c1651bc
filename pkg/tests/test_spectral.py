import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weylbox.algebra import SIGMA_X, Rep, pauli, random_unitary
from weylbox.boundary import (
    BoundarySpec,
    PhaseBC,
    bc_dirac_rep,
    bc_via_transform,
    bc_weyl_axis,
    mit_bag_spec,
    reality_admissible,
)
from weylbox.representations import rep_change_matrix
from weylbox.spectral import (
    ConsistencyError,
    ContinuumFamilyError,
    EigenPair,
    NumericError,
    SampledSpinor,
    SpectralProblem,
    Weyl1DProblem,
    boundary_matrix,
    eigenfunction,
    eigenfunction_1d_weyl,
    find_spectrum,
    scan_step,
    shooting_oracle,
    singular_values,
    spectrum_1d_weyl,
    uniform_grid,
)

PI = math.pi

# (spec, window, analytic k values, degeneracy)
CLOSED_FORM = {
    "periodic": (bc_weyl_axis(3, SIGMA_X), (-7, 7), [-2 * PI, 0.0, 2 * PI], 2),
    "antiperiodic": (bc_weyl_axis(3, -SIGMA_X), (-7, 7), [-PI, PI], 2),
    "mit": (mit_bag_spec(), (0, 8), [PI / 2, 3 * PI / 2, 5 * PI / 2], 1),
    "dirichlet": (bc_weyl_axis(1, -np.eye(2)), (-4, 4), [-PI, 0.0, PI], 1),
}


def _axis3_oracle(u, window, length=1.0):
    """Roots of z^2 - (u12 + u21) z - det U with z = exp(i k l)."""
    zs = np.roots([1.0, -(u[0, 1] + u[1, 0]), -np.linalg.det(u)])
    ks = []
    for z in zs:
        base = np.angle(z) / length
        n_lo = math.floor((window[0] - base) * length / (2 * PI)) - 1
        n_hi = math.ceil((window[1] - base) * length / (2 * PI)) + 1
        ks += [base + 2 * PI * n / length for n in range(n_lo, n_hi + 1)]
    return sorted(k for k in ks if window[0] < k < window[1])


@pytest.mark.parametrize("name", list(CLOSED_FORM))
def test_closed_form_spectra(name):
    spec, window, expected, deg = CLOSED_FORM[name]
    prob = SpectralProblem(spec.axis, spec)
    pairs = find_spectrum(prob, window)
    assert [round(p.k / PI, 6) for p in pairs] == [round(k / PI, 6) for k in expected]
    for p, k in zip(pairs, expected):
        assert abs(p.k - k) < 1e-8
        assert p.degeneracy == deg
        assert p.energy == p.k
        assert shooting_oracle(prob, k) < 1e-6


def test_closed_form_frozen_mu_truncated_example():
    # mu = 1.5707963 is not exactly pi/2, so the periodic roots move by ~2.7e-8
    from weylbox.algebra import UnitaryParams

    spec = bc_weyl_axis(3, UnitaryParams(1.5707963, 0.0, 1.0, 0.0, 0.0))
    ks = [p.k for p in find_spectrum(SpectralProblem(3, spec), (-7, 7))]
    assert np.allclose(ks, [-2 * PI, 0.0, 2 * PI], atol=1e-7)


def test_singular_at_analytic_points_only():
    prob = SpectralProblem(3, mit_bag_spec())
    s = singular_values(prob, [PI / 2, PI])
    assert s[0, -1] < 1e-12
    assert s[1, -1] > 0.5
    assert boundary_matrix(prob, PI / 2).shape == (2, 2)
    assert shooting_oracle(prob, PI / 2) < 1e-6
    assert shooting_oracle(prob, PI) > 0.5


@settings(max_examples=25)
@given(st.integers(0, 2**32 - 1))
def test_axis3_spectrum_matches_quadratic_oracle(seed):
    u = random_unitary(np.random.default_rng(seed))
    window = (-9.7, 9.3)
    ks = [p.k for p in find_spectrum(SpectralProblem(3, bc_weyl_axis(3, u)), window)]
    expected = _axis3_oracle(u, window)
    # coincident roots (double z) are reported once with degeneracy 2
    merged = [k for i, k in enumerate(expected) if i == 0 or abs(k - expected[i - 1]) > 1e-6]
    assert len(ks) == len(merged)
    assert np.allclose(ks, merged, atol=1e-8)


def test_finer_scan_finds_nothing_new(rng):
    for _ in range(5):
        j = int(rng.integers(1, 4))
        prob = SpectralProblem(j, bc_weyl_axis(j, random_unitary(rng)), 1.3)
        coarse = [p.k for p in find_spectrum(prob, (-12, 12))]
        fine = [p.k for p in find_spectrum(prob, (-12, 12), step=scan_step(1.3) / 10)]
        assert len(coarse) == len(fine)
        assert np.allclose(coarse, fine, atol=1e-9)


def test_length_scaling():
    spec = bc_weyl_axis(3, SIGMA_X)
    ks = [p.k for p in find_spectrum(SpectralProblem(3, spec, length=2.0), (0.1, 7))]
    assert np.allclose(ks, [PI, 2 * PI], atol=1e-8)


def test_particle_type_flips_energy():
    prob = SpectralProblem(3, mit_bag_spec(), particle_type=2)
    p = find_spectrum(prob, (0, 2))[0]
    assert p.energy == -p.k


@pytest.mark.parametrize("rep", [Rep.DIRAC, Rep.MAJORANA, Rep.JACKIW_REBBI])
def test_spectrum_invariant_under_transport(rep, rng):
    u = random_unitary(rng)
    weyl = find_spectrum(SpectralProblem(3, bc_weyl_axis(3, u)), (-10, 10))
    moved = bc_via_transform(u, rep_change_matrix(rep, Rep.WEYL))
    other = find_spectrum(SpectralProblem(moved.axis, moved), (-10, 10))
    assert np.allclose([p.k for p in weyl], [p.k for p in other], atol=1e-8)
    assert [p.degeneracy for p in weyl] == [p.degeneracy for p in other]


def test_eigenfunctions_satisfy_ode_and_bc(rng):
    for j in (1, 2, 3):
        spec = bc_weyl_axis(j, random_unitary(rng))
        prob = SpectralProblem(j, spec)
        for pair in find_spectrum(prob, (-8, 8)):
            for st_ in eigenfunction(prob, pair, 2001):
                assert np.linalg.norm(spec.residual(st_.boundary_vector())) < 1e-8
                assert abs(st_.norm() - 1) < 1e-12
                # -i sigma_j psi' = k psi, by central differences
                h = st_.spacing
                d = (st_.values[2:] - st_.values[:-2]) / (2 * h)
                lhs = -1j * d @ pauli(j).T
                err = np.max(np.abs(lhs - pair.k * st_.values[1:-1]))
                assert err < 1e-4 * (1 + pair.k**2)


def test_eigenfunctions_orthonormal():
    prob = SpectralProblem(3, bc_weyl_axis(3, SIGMA_X))
    states = [s for p in find_spectrum(prob, (-20, 20)) for s in eigenfunction(prob, p, 4001)]
    gram = np.array([[a.inner(b) for b in states] for a in states])
    assert len(states) == 14
    assert np.max(np.abs(gram - np.eye(len(states)))) < 1e-6


def test_conjugated_eigenfunctions_stay_in_family(rng):
    rot = np.array([[0.6, -0.8], [0.8, 0.6]])
    for j, u in ((1, rot), (3, SIGMA_X), (3, rot), (1, -np.eye(2))):
        spec = bc_weyl_axis(j, u)
        assert reality_admissible(spec)
        prob = SpectralProblem(j, spec)
        for pair in find_spectrum(prob, (-8, 8)):
            for st_ in eigenfunction(prob, pair, 257):
                v = st_.conj().boundary_vector()
                assert np.linalg.norm(spec.residual(v)) < 1e-8


def test_conjugation_leaves_non_real_family():
    spec = bc_weyl_axis(3, 1j * np.eye(2))
    prob = SpectralProblem(3, spec)
    pair = find_spectrum(prob, (0.1, 4))[0]
    v = eigenfunction(prob, pair, 65)[0].conj().boundary_vector()
    assert np.linalg.norm(spec.residual(v)) > 1e-3


def test_continuum_family_detected():
    # top(l) = 0 and top(0) = 0 leaves B free for every k
    L = np.array([[1, 0, 0, 0], [0, 0, 1, 0]])
    spec = BoundarySpec(3, np.eye(2), L, np.zeros((2, 4)))
    with pytest.raises(ContinuumFamilyError):
        find_spectrum(SpectralProblem(3, spec), (-5, 5))


def test_stale_eigenpair_rejected():
    prob = SpectralProblem(3, mit_bag_spec())
    bogus = EigenPair(1.0, 1.0, np.array([[1, 0]], dtype=complex), 1, 0.0)
    with pytest.raises(ConsistencyError):
        eigenfunction(prob, bogus, 33)


def test_problem_validation():
    with pytest.raises(ValueError):
        SpectralProblem(1, mit_bag_spec())
    with pytest.raises(ValueError):
        SpectralProblem(3, mit_bag_spec(), length=0.0)
    with pytest.raises(ValueError):
        SpectralProblem(3, mit_bag_spec(), particle_type=3)
    with pytest.raises(ValueError):
        find_spectrum(SpectralProblem(3, mit_bag_spec()), (1, 0))


def test_narrow_window_is_empty():
    assert find_spectrum(SpectralProblem(3, mit_bag_spec()), (1.0, 1.01)) == []


def test_shooting_underflow():
    prob = SpectralProblem(3, mit_bag_spec(), length=1e-320)
    with pytest.raises(NumericError):
        shooting_oracle(prob, 1.0)


def test_weyl1d_spectrum():
    pairs = spectrum_1d_weyl(1, 0.0, 1.0, (-2, 2))
    assert [n for n, _ in pairs] == [-2, -1, 0, 1, 2]
    assert np.allclose([e for _, e in pairs], 2 * PI * np.arange(-2, 3))
    anti = spectrum_1d_weyl(2, PI, 2.0, (0, 1))
    assert np.allclose([e for _, e in anti], [-PI / 2, -3 * PI / 2])


def test_weyl1d_eigenfunction():
    prob = Weyl1DProblem(PhaseBC(1.0), 1.0)
    st_ = eigenfunction_1d_weyl(prob, 2, 2001)
    assert st_.n_components == 1
    assert abs(st_.norm() - 1) < 1e-12
    assert abs(prob.bc.residual(st_.values[0, 0], st_.values[-1, 0])) < 1e-12


def test_sampled_spinor_basics():
    grid = uniform_grid(1.0, 11)
    st_ = SampledSpinor(grid, np.ones((11, 2)))
    assert abs(st_.norm() - math.sqrt(2)) < 1e-12
    assert st_.normalize().normalized
    with pytest.raises(ValueError):
        SampledSpinor(grid, np.ones((10, 2)))
    with pytest.raises(ValueError):
        SampledSpinor(grid, np.ones((11, 2)), normalized=True)
    with pytest.raises(ValueError):
        SampledSpinor(grid, np.ones(11)).boundary_vector()
    with pytest.raises(ValueError):
        uniform_grid(1.0, 1)


def test_dirac_rep_problem_runs():
    spec = bc_dirac_rep("jackiw-rebbi", np.eye(2))
    pairs = find_spectrum(SpectralProblem(2, spec), (-7, 7))
    assert pairs and all(p.sigma_min < 1e-10 for p in pairs)
