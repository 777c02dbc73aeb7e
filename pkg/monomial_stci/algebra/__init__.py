"""
Exact monomial, binomial, polynomial and matrix arithmetic.
"""

from .matrices import MonomialMatrix, all_2minors, minor_2x2
from .monomials import (
    Binomial,
    MinorValue,
    Monomial,
    VariableSet,
    ZeroMinor,
    mono_gcd,
    squarefree_part,
    support,
)
from .parsing import infer_variables, parse_matrix, parse_monomial, parse_polynomial
from .polynomials import SparsePolynomial, as_polynomial

__all__ = [
    "Binomial",
    "MinorValue",
    "Monomial",
    "MonomialMatrix",
    "SparsePolynomial",
    "VariableSet",
    "ZeroMinor",
    "all_2minors",
    "as_polynomial",
    "infer_variables",
    "minor_2x2",
    "mono_gcd",
    "parse_matrix",
    "parse_monomial",
    "parse_polynomial",
    "squarefree_part",
    "support",
]
