"""
Utility module initialization.
"""

from .helpers import (
    binomial_coefficient,
    configure_logging,
    format_field,
    gcd_all,
    is_prime,
    log_performance,
    validate_affine_exponents,
    validate_curve_exponents,
    validate_primes,
)

__all__ = [
    "binomial_coefficient",
    "configure_logging",
    "format_field",
    "gcd_all",
    "is_prime",
    "log_performance",
    "validate_affine_exponents",
    "validate_curve_exponents",
    "validate_primes",
]
