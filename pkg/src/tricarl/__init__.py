"""Closed-form simulator for dissipative three-mode collective atomic
recoil lasing: Gaussian covariance evolution, physical observables, and
continuous-variable entanglement classification."""

from .covariance import (
    CovarianceState,
    NoiseMatrix,
    covariance,
    covariance_closed,
    covariance_entrywise,
    diffusion_matrix,
    ode_oracle,
    q_closed_form,
    q_quadrature,
    steady_state,
)
from .dynamics import (
    Propagator,
    Spectrum,
    cubic_coefficients,
    cubic_roots,
    drift_generator,
    effective_generator,
    eigensystem,
    gain,
    propagator,
    solve_cubic,
    spectrum,
    unstable_root,
)
from .entanglement import (
    SYMPLECTIC_FORM,
    SeparabilityReport,
    asymptotic_eta,
    classify,
    gamma_matrix,
    min_eigenvalue_hermitian,
    physicality,
    quadrature_covariance,
    separability_report,
    two_mode_matrix,
)
from .errors import (
    DegenerateSpectrum,
    InvalidSpec,
    NegativeOccupation,
    NotHermitian,
    NotStable,
    RegimeMismatch,
    ToleranceNotMet,
    TricarlError,
    UndefinedCorrelation,
)
from .model import DerivedParams, LabParams, ModelParams, carl_parameter, derive, from_lab
from .observables import (
    ModeObservables,
    bunching,
    fourth_order,
    g2_auto,
    g2_cross,
    gain_curve,
    mode_observables,
    number_squeezing,
    occupations,
    squeezing_from_moments,
    variances,
)
from .regimes import (
    SaturationEstimates,
    classify_regime,
    lossless_highgain_populations,
    saturation_estimates,
    sr_quantum_populations,
    sr_semiclassical_populations,
    superradiant_roots,
)
from .sweep import (
    AXES,
    OUTPUTS,
    FigurePreset,
    SweepSpec,
    evolve_point,
    figure_preset,
    run_preset,
    run_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "AXES",
    "CovarianceState",
    "DegenerateSpectrum",
    "DerivedParams",
    "FigurePreset",
    "InvalidSpec",
    "LabParams",
    "ModeObservables",
    "ModelParams",
    "NegativeOccupation",
    "NoiseMatrix",
    "NotHermitian",
    "NotStable",
    "OUTPUTS",
    "Propagator",
    "RegimeMismatch",
    "SYMPLECTIC_FORM",
    "SaturationEstimates",
    "SeparabilityReport",
    "Spectrum",
    "SweepSpec",
    "ToleranceNotMet",
    "TricarlError",
    "UndefinedCorrelation",
    "asymptotic_eta",
    "bunching",
    "carl_parameter",
    "classify",
    "classify_regime",
    "covariance",
    "covariance_closed",
    "covariance_entrywise",
    "cubic_coefficients",
    "cubic_roots",
    "derive",
    "diffusion_matrix",
    "drift_generator",
    "effective_generator",
    "eigensystem",
    "evolve_point",
    "figure_preset",
    "fourth_order",
    "from_lab",
    "g2_auto",
    "g2_cross",
    "gain",
    "gain_curve",
    "gamma_matrix",
    "lossless_highgain_populations",
    "min_eigenvalue_hermitian",
    "mode_observables",
    "number_squeezing",
    "occupations",
    "ode_oracle",
    "physicality",
    "propagator",
    "q_closed_form",
    "q_quadrature",
    "quadrature_covariance",
    "run_preset",
    "run_sweep",
    "saturation_estimates",
    "separability_report",
    "solve_cubic",
    "spectrum",
    "squeezing_from_moments",
    "sr_quantum_populations",
    "sr_semiclassical_populations",
    "steady_state",
    "superradiant_roots",
    "two_mode_matrix",
    "unstable_root",
    "variances",
]
