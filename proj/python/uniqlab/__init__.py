"""Fourier uniqueness-pair lab: exponent recursions, decay bounds, gap
sharpness sequences and finite sampling operators."""

from uniqlab._core import (
    BasisSpec,
    ExponentPair,
    NodeFamily,
    build_operator,
    build_sharpness_sequence,
    derivative_zero_intervals,
    derive_constants,
    diagonal_threshold,
    gamma_moment_bound,
    max_sum_squares,
    omega_for_full_range,
    omega_limit_closed_form,
    reconstruct,
    recursion_fixed_point,
    recursion_trace,
    region_A_membership,
    run_cli,
    sample_combination,
    sharpness_ratio,
    sigma_min,
    solve_omega,
    verify_basis,
)

__all__ = [
    "BasisSpec",
    "ExponentPair",
    "NodeFamily",
    "build_operator",
    "build_sharpness_sequence",
    "derivative_zero_intervals",
    "derive_constants",
    "diagonal_threshold",
    "gamma_moment_bound",
    "max_sum_squares",
    "omega_for_full_range",
    "omega_limit_closed_form",
    "reconstruct",
    "recursion_fixed_point",
    "recursion_trace",
    "region_A_membership",
    "run_cli",
    "sample_combination",
    "sharpness_ratio",
    "sigma_min",
    "solve_omega",
    "verify_basis",
]
