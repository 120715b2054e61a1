"""Coulomb scattering amplitudes, both ways.

The closed-form side (:mod:`coulomb_kit.coulomb_core`) evaluates the
S-matrix, phase shifts, the auxiliary function and the exact amplitude;
the series side (:mod:`coulomb_kit.summation`) sums the formally
divergent partial-wave expansion by Abel smoothing plus extrapolation and
checks it against the closed form.  :mod:`coulomb_kit.cli` exposes both
as a command-line tool.
"""

from .errors import ConfigError, DomainError, GammaPoleError
from .special_functions import (
    LegendreSequence,
    gamma_ratio,
    legendre_derivative_identity_residual,
    legendre_sequence,
    log_gamma,
)
from .coulomb_core import (
    CLOSED_FORM,
    REGULARIZED_SERIES,
    AmplitudeResult,
    PartialWave,
    PhysicalParams,
    closed_amplitude,
    closed_auxiliary_sum,
    closed_partial_wave_sum,
    differential_cross_section,
    ode_residual,
    params_from_physical,
    s_matrix,
)
from .summation import (
    ABEL_DAMPING,
    HEAT_DAMPING,
    ConvergenceReport,
    SummationConfig,
    completeness_kernel,
    default_config,
    s_matrix_sequence,
    series_amplitude,
    smoothed_auxiliary_sum,
    smoothed_partial_wave_sum,
    unregularized_partial_sums,
)

__version__ = "0.1.0"

__all__ = [
    "ABEL_DAMPING",
    "AmplitudeResult",
    "CLOSED_FORM",
    "ConfigError",
    "ConvergenceReport",
    "DomainError",
    "GammaPoleError",
    "HEAT_DAMPING",
    "LegendreSequence",
    "PartialWave",
    "PhysicalParams",
    "REGULARIZED_SERIES",
    "SummationConfig",
    "closed_amplitude",
    "closed_auxiliary_sum",
    "closed_partial_wave_sum",
    "completeness_kernel",
    "default_config",
    "differential_cross_section",
    "gamma_ratio",
    "legendre_derivative_identity_residual",
    "legendre_sequence",
    "log_gamma",
    "ode_residual",
    "params_from_physical",
    "s_matrix",
    "s_matrix_sequence",
    "series_amplitude",
    "smoothed_auxiliary_sum",
    "smoothed_partial_wave_sum",
    "unregularized_partial_sums",
]
