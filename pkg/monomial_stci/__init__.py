"""
Monomial STCI - binomial equations for monomial curves in three-dimensional space
"""

__version__ = "1.0.0"
__author__ = "Computational Algebra Team"
__description__ = "Exact construction and finite-field verification of binomial systems defining monomial curves"
