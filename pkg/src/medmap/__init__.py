"""Electrodynamics of an isotropic, nondispersive medium in uniform motion.

The package maps fields, waves, currents and momenta between vacuum and the
medium through one transformation matrix, solves the dispersion branches of
the moving medium (including the regime where one branch turns negative),
keeps the energy-momentum books, and predicts the standard radiation-
pressure bench experiments in SI units.

All functions are pure and all values immutable, so everything is safe to
call concurrently.
"""

from .constants import C_LIGHT, EPS0, HBAR
from .dispersion import (
    BRANCH_A,
    BRANCH_B,
    DEGENERATE,
    ELLIPSOID,
    TWO_SHEET_HYPERBOLOID,
    PlaneWave,
    WaveSurface,
    cherenkov_cone,
    cherenkov_parameter,
    cherenkov_regime,
    classify_wave_surface,
    dispersion_residual,
    is_on_shell,
    make_plane_wave,
    solve_k0,
    solve_k0_many,
)
from .emtensor import (
    NULL,
    SPACELIKE,
    TIMELIKE,
    MomentumReport,
    canonical_tensor,
    cell_four_momentum,
    classify_momentum,
    cycle_averaged_canonical,
    cycle_averaged_minkowski,
    minkowski_tensor,
    photon_momentum,
)
from .forces import (
    ExperimentPrediction,
    ForceSample,
    abraham_force,
    abraham_minkowski_force,
    abraham_torque,
    experiment_suite,
    jones_ratio,
    mirror_pressure,
    photon_recoil,
    surface_force_integral,
)
from .fourvec import (
    LOWER,
    METRIC,
    METRIC_SIGNATURE,
    UPPER,
    FourVector,
    InvariantViolation,
    Tensor2,
    boost_four_vector,
    boost_matrix,
    boost_tensor,
    double_contraction,
    four_velocity,
    lorentz_gamma,
    metric_tensor,
    minkowski_dot,
    minkowski_trace,
)
from .mapping import (
    PolarizationBasis,
    map_current,
    map_four_momentum,
    map_point,
    map_polarization,
    map_potential_to_medium,
    map_potential_to_vacuum,
    map_wavevector,
    medium_polarization_basis,
    mode_normalization,
    polarization_sum,
    singular_support,
    transverse_plane_wave,
    vacuum_polarization_basis,
)
from .medium import (
    FieldTensors,
    MediumSpec,
    conjugate_momenta,
    constitutive_h,
    eb_from_field_tensor,
    field_tensor_from_eb,
    gauge_scalar,
    lagrangian_density,
    medium_matrix,
    medium_matrix_mixed,
    plane_wave_amplitudes,
    plane_wave_fields,
    wave_equation_residual,
)

__version__ = "0.1.0"
