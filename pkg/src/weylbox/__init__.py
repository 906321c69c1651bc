"""Weyl and Dirac operators on a finite interval: self-adjoint boundary
families, their spectra, Lorentz kinematics and time evolution."""

from .algebra import (
    Rep,
    UnitaryParams,
    alpha_matrix,
    build_unitary,
    gamma_pair,
    gamma_set_weyl_4d,
    pauli,
    random_unitary,
    unitary_params,
    verify_clifford_2d,
    verify_clifford_4d,
)
from .boundary import (
    BoundarySpec,
    Confinement,
    PhaseBC,
    bc_1d_weyl,
    bc_dirac_rep,
    bc_equivalent,
    bc_via_transform,
    bc_weyl_axis,
    bc_weyl_axis3_swapped,
    boundary_term,
    canonical_unitary,
    classify_confinement,
    mit_bag_spec,
    reality_admissible,
    transported_unitary,
)
from .dynamics import EvolutionRun, diagnostics, evolve, expand_initial
from .kinematics import (
    BoostParams,
    PlaneWave1D,
    PlaneWave3D,
    RotationParams,
    boost_1d,
    boost_4d,
    chirality_project,
    covariance_residual,
    helicity_eigenvalue,
    rotation_4d,
)
from .representations import RepChange, rep_change_matrix
from .spectral import (
    EigenPair,
    SampledSpinor,
    SpectralProblem,
    Weyl1DProblem,
    eigenfunction,
    find_spectrum,
    shooting_oracle,
    spectrum_1d_weyl,
)

__version__ = "0.1.0"
