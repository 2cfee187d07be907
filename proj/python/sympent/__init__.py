"""Entanglement entropy of Gaussian states from covariance matrices.

Covariance matrices use qqpp ordering with hbar = 1, so the vacuum is I/2.
"""

from ._sympent import (
    Error,
    InvalidDimension,
    InvalidPartition,
    InvalidState,
    MalformedInput,
    NoGroundState,
    NumericalFailure,
    ParameterError,
    TruncationError,
    UnphysicalEigenvalue,
    chain_covariance,
    characteristic_function,
    covariance_from_json,
    covariance_to_json,
    entanglement_entropy,
    mean_occupation,
    mode_entropy,
    normal_frequencies,
    purity_check,
    random_symplectic,
    reduce,
    required_n_max,
    symplectic_form,
    symplectic_spectrum,
    thermal_entropy_bruteforce,
    thermal_parameter,
    two_mode_squeezed_entropy,
    two_oscillator_covariance,
    vacuum,
    validate,
    wigner_function,
    williamson,
)

__version__ = "0.1.0"
