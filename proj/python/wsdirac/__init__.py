"""Dirac scattering and bound states in a Woods-Saxon potential."""

from ._core import (
    BoundStateSpectrum,
    DegenerateParameters,
    DomainError,
    Error,
    MuBranch,
    NonConvergence,
    OracleMode,
    OracleScattering,
    OverflowError,
    PhysicalConfig,
    PoleError,
    ProblemKind,
    Resonance,
    ScatteringResult,
    StiffnessError,
    SweepVariable,
    ThresholdError,
    amplitude_ratios,
    eigen_condition,
    find_bound_states,
    hyp2f1,
    integrate_scattering,
    log_gamma,
    reflection_transmission,
    resonances,
    shooting_bound_states,
    sweep,
    verify_equivalence,
)

__version__ = "1.0.0"
