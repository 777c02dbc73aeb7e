"""
Utility functions for validation, logging, and common integer arithmetic.
"""

import sys
import time
from functools import wraps
from math import gcd
from typing import Any, Callable, Iterable, List, Sequence, Tuple

from loguru import logger

from ..config.settings import APP_CONFIG

_LOG_FORMAT = "<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | <cyan>{name}</cyan> - {message}"


def configure_logging(level: str = None) -> None:
    """
    Route loguru output to stderr at the requested level.

    Args:
        level: Log level name; defaults to APP_CONFIG["log_level"]
    """
    logger.remove()
    logger.add(sys.stderr, level=(level or APP_CONFIG["log_level"]).upper(), format=_LOG_FORMAT)


def log_performance(func: Callable) -> Callable:
    """Decorator logging the wall time of an expensive call at DEBUG level."""

    @wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        start = time.perf_counter()
        result = func(*args, **kwargs)
        elapsed = time.perf_counter() - start
        size = len(result) if hasattr(result, "__len__") else None
        logger.debug(
            "{}: {:.3f}s{}", func.__qualname__, elapsed, f" ({size:,} items)" if size is not None else ""
        )
        return result

    return wrapper


def is_prime(n: int) -> bool:
    """Trial-division primality test (desk scale)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def gcd_all(values: Iterable[int]) -> int:
    """gcd of every value; 0 for an empty iterable."""
    result = 0
    for v in values:
        result = gcd(result, v)
    return result


def binomial_coefficient(n: int, k: int) -> int:
    """
    C(n, k) by the multiplicative rule.

    Args:
        n: Nonnegative integer
        k: Integer; 0 is returned outside 0 <= k <= n

    Returns:
        Exact binomial coefficient
    """
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    result = 1
    for i in range(1, k + 1):
        # exact at every step: result * (n - k + i) is divisible by i
        result = result * (n - k + i) // i
    return result


def validate_curve_exponents(delta: int, eps1: int, eps2: int) -> Tuple[bool, str]:
    """
    Validate projective curve exponents before orientation is normalized.

    Args:
        delta: Degree of the parametrization
        eps1: xi-exponent of x1
        eps2: xi-exponent of x2

    Returns:
        Tuple of (is_valid, error_message)
    """
    for name, value in (("delta", delta), ("eps1", eps1), ("eps2", eps2)):
        if value <= 0:
            return False, f"{name} must be a positive integer, got {value}"
    if eps1 >= delta:
        return False, f"eps1 must be smaller than delta (got eps1={eps1}, delta={delta})"
    if eps2 >= delta:
        return False, f"eps2 must be smaller than delta (got eps2={eps2}, delta={delta})"
    return True, ""


def validate_affine_exponents(exponents: Sequence[int]) -> Tuple[bool, str]:
    """
    Validate the three exponents of an affine monomial curve.

    Returns:
        Tuple of (is_valid, error_message)
    """
    if len(exponents) != 3:
        return False, f"an affine curve needs exactly 3 exponents, got {len(exponents)}"
    if any(e <= 0 for e in exponents):
        return False, f"affine exponents must be positive, got {list(exponents)}"
    if len(set(exponents)) != 3:
        return False, f"affine exponents must be pairwise distinct, got {list(exponents)}"
    return True, ""


def validate_primes(primes: Sequence[int]) -> Tuple[bool, str]:
    """
    Validate oracle primes.

    Returns:
        Tuple of (is_valid, error_message)
    """
    bad: List[int] = [p for p in primes if not is_prime(p)]
    if bad:
        return False, f"not prime: {', '.join(str(p) for p in bad)}"
    return True, ""


def format_field(p: int, k: int = 1) -> str:
    """Short display name of a finite field, GF(p) or GF(p^k)."""
    return f"GF({p})" if k == 1 else f"GF({p}^{k})"
