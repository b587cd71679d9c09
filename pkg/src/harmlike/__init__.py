"""Harmonic-like numbers H_n(a), sine-integral product series, and inverse binomial identities."""

from .binomial import (
    IdentityReport,
    harmonic_half_from_binomials,
    inverse_binomial_sum,
    staver_rhs,
    verify_staver,
)
from .harmonic import (
    HarmonicParam,
    HarmonicValue,
    Method,
    evaluate,
    harmonic_half,
    harmonic_like_direct,
    harmonic_like_exact,
    harmonic_like_sequence,
    integral_eq1,
    integral_eq2_exact,
    min_nodes,
)
from .series import (
    SeriesCoefficients,
    SeriesResult,
    cauchy_product_oracle,
    cos_si_series,
    cosh_shi_series,
    exact_coefficients,
    reference_value,
    series_value,
    shi_reference,
    shi_squared_series,
    si_reference,
    si_squared_series,
)

__version__ = "0.1.0"
