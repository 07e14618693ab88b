"""Exact arithmetic for twisted Eulerian polynomials, alternating p-adic
q-integral moments, and the L-series that interpolates them.

The package verifies every identity it implements along at least two
independent evaluation paths: formal power series over cyclotomic fields,
triangular solves of the integral functional equations, truncated p-adic
sums, and archimedean series.
"""
from .characters import (
    DirichletCharacter,
    character_from_table,
    enumerate_characters,
    principal_character,
    quadratic_character,
)
from .cyclotomic import (
    CyclotomicField,
    CyclotomicNumber,
    cyclotomic_field,
    cyclotomic_polynomial,
    embed_complex,
    galois_conjugate,
    lift_to_field,
)
from .errors import MathError
from .eulerian import descent_oracle, eulerian_gf_coefficients, eulerian_recurrence, power_sum_rational
from .fermionic import (
    IntegralSpec,
    TruncationReport,
    char_twist_integral,
    distribution_identity_check,
    padic_truncation,
    poly_twist_integral,
    series_limit_check,
)
from .lfunction import LEvaluation, LParams, interpolation_check, l_eval, series_partial_sum_check
from .polys import Poly
from .rationals import PLUS_INFINITY, padic_valuation, q_bracket, q_bracket_neg
from .series import TruncatedSeries, exp_linear, nth_taylor_coefficient
from .twisted import (
    TwistedConfig,
    TwistedValue,
    euler_gf_consistency,
    euler_reduction_check,
    multiplication_residual,
    twisted_euler,
    twisted_gf,
    twisted_value,
    twisted_values,
    witt_residual,
)

__version__ = "0.1.0"
