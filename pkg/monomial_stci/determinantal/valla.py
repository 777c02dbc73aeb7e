"""
Two equations for the 2-minors of (a^m, b^n, c^p / b^r, c^s, a^u).

With N = n + r, f = a^m*c^s - b^N and

    g = sum_{k=0..N} (-1)^(N-k) * C(N, k) * a^(k*u + tau_k*m) * b^sigma_k
                     * c^((N-k)*(p+s) + tau_k*s - n*s)

where (tau_k, sigma_k) = divmod(k*n, N). When n = 0 the pair degenerates to
f = a^m*c^s - b^r and g = a^u - c^(p+s).
"""

from typing import Optional, Sequence, Tuple, Union

from loguru import logger

from ..algebra.matrices import MonomialMatrix
from ..algebra.monomials import Binomial, Monomial, VariableSet
from ..algebra.polynomials import SparsePolynomial
from ..config.settings import RENDER_CONFIG
from ..exceptions import DimensionMismatchError, NegativeExponentError, StciError
from ..utils.helpers import binomial_coefficient


def valla_variables(names: Optional[Sequence[str]] = None) -> VariableSet:
    names = list(names or RENDER_CONFIG["matrix_variables"][:3])
    if len(names) != 3:
        raise DimensionMismatchError(f"the (f, g) pair lives in 3 variables, got {len(names)} names")
    return VariableSet.of(names)


def _check_exponents(m: int, n: int, p: int, r: int, s: int, u: int) -> None:
    for name, value in (("m", m), ("p", p), ("r", r), ("s", s), ("u", u)):
        if value <= 0:
            raise StciError(f"{name} must be positive, got {value}")
    if n < 0:
        raise StciError(f"n must be nonnegative, got {n}")


def valla_matrix(
    m: int, n: int, p: int, r: int, s: int, u: int, variables: Optional[VariableSet] = None
) -> MonomialMatrix:
    """The matrix whose 2-minors (f, g) generate up to radical."""
    _check_exponents(m, n, p, r, s, u)
    abc = variables or valla_variables()
    return MonomialMatrix.from_exponents(
        abc,
        (
            ((m, 0, 0), (0, n, 0), (0, 0, p)),
            ((0, r, 0), (0, 0, s), (u, 0, 0)),
        ),
    )


def valla_fg(
    m: int, n: int, p: int, r: int, s: int, u: int, variables: Optional[VariableSet] = None
) -> Tuple[Binomial, Union[Binomial, SparsePolynomial]]:
    """
    Args:
        m, p, r, s, u: Positive exponents
        n: Nonnegative exponent; 0 selects the degenerate pair

    Returns:
        (f, g) over a, b, c (or the given variables); g is itself a binomial in the degenerate case

    Raises:
        NegativeExponentError: a term of g would get a negative exponent
    """
    _check_exponents(m, n, p, r, s, u)
    abc = variables or valla_variables()
    if n == 0:
        f = Binomial.from_terms(Monomial(abc, (m, 0, s)), Monomial(abc, (0, r, 0)))
        g = Binomial.from_terms(Monomial(abc, (u, 0, 0)), Monomial(abc, (0, 0, p + s)))
        return f, g

    total = n + r
    f = Binomial.from_terms(Monomial(abc, (m, 0, s)), Monomial(abc, (0, total, 0)))
    terms = []
    for k in range(total + 1):
        tau, sigma = divmod(k * n, total)
        exponents = (k * u + tau * m, sigma, (total - k) * (p + s) + tau * s - n * s)
        if min(exponents) < 0:
            raise NegativeExponentError(f"term k={k} of g has exponents {exponents}")
        sign = -1 if (total - k) % 2 else 1
        terms.append((exponents, sign * binomial_coefficient(total, k)))
    g = SparsePolynomial.from_terms(abc, terms)
    logger.debug("g has {} terms of degree up to {}", len(g), g.total_degree)
    return f, g
