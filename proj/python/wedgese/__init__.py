"""Spontaneous-emission rates for a dipole inside a perfectly conducting wedge.

Thin Python wrapper over the C++ core: closed-form rates per polarization,
a brute-force mode-sum cross-check, grid scans, and CSV output.
"""

from ._wedgese import (
    AtomPosition,
    CheckResult,
    DipoleWeights,
    IoError,
    ModeKind,
    ModeWeight,
    NonConvergenceError,
    Polarization,
    QuadratureConfig,
    Range,
    RateColumn,
    RateResult,
    Report,
    ScanMode,
    ScanRow,
    ScanSpec,
    SumFamily,
    Transition,
    TrigKind,
    TruncationError,
    VerifyLevel,
    WedgeGeometry,
    bessel_j,
    bessel_j_array,
    bessel_j_prime,
    braces_phi,
    braces_rho,
    braces_z,
    check_addition_theorem,
    check_angular_reduction,
    check_derivative_identity,
    csv_string,
    emitted_power,
    figure_preset,
    free_space_rate,
    g_parallel,
    g_perp,
    h_phi,
    h_rho,
    mode_sum_braces,
    mode_weight,
    normalized_rates,
    run_scan,
    run_verify,
    write_csv,
)

__all__ = [
    "AtomPosition",
    "CheckResult",
    "DipoleWeights",
    "IoError",
    "ModeKind",
    "ModeWeight",
    "NonConvergenceError",
    "Polarization",
    "QuadratureConfig",
    "Range",
    "RateColumn",
    "RateResult",
    "Report",
    "ScanMode",
    "ScanRow",
    "ScanSpec",
    "SumFamily",
    "Transition",
    "TrigKind",
    "TruncationError",
    "VerifyLevel",
    "WedgeGeometry",
    "bessel_j",
    "bessel_j_array",
    "bessel_j_prime",
    "braces_phi",
    "braces_rho",
    "braces_z",
    "check_addition_theorem",
    "check_angular_reduction",
    "check_derivative_identity",
    "csv_string",
    "emitted_power",
    "figure_preset",
    "free_space_rate",
    "g_parallel",
    "g_perp",
    "h_phi",
    "h_rho",
    "mode_sum_braces",
    "mode_weight",
    "normalized_rates",
    "run_scan",
    "run_verify",
    "write_csv",
]
