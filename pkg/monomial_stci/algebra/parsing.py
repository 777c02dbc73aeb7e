"""
Text formats for monomials, polynomials and matrices.

    monomial    a^2*d, x0*x3^2, 1
    polynomial  x1^3 - x0^2*x2, a^4 - 2*a*b*c + c^3
    matrix      a^2*d,b,c;b,a,d   (entries ',' rows ';')
"""

import re
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from ..config.settings import RENDER_CONFIG
from ..exceptions import ParseError, StciError
from .matrices import MonomialMatrix
from .monomials import Monomial, VariableSet
from .polynomials import SparsePolynomial

_FACTOR = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\^(\d+))?$")
_TERM = re.compile(r"([+-]?)([^+-]+)")


def _factor_powers(text: str) -> List[Tuple[str, int]]:
    """Split 'a^2*d' into [('a', 2), ('d', 1)]; '1' is the empty product."""
    text = text.replace(" ", "")
    if not text:
        raise ParseError("empty monomial")
    if text == "1":
        return []
    powers = []
    for factor in text.split(RENDER_CONFIG["times_symbol"]):
        match = _FACTOR.match(factor)
        if not match:
            raise ParseError(f"cannot parse factor '{factor}' in '{text}'")
        powers.append((match.group(1), int(match.group(2) or 1)))
    return powers


def infer_variables(names: Sequence[str]) -> VariableSet:
    """
    Pick a variable set covering the given names.

    The default matrix names (a..d) or curve names (x0..x3) are used when they
    cover everything; otherwise the names found, sorted.
    """
    found = set(names)
    for defaults in (RENDER_CONFIG["matrix_variables"], RENDER_CONFIG["curve_variables"]):
        if found <= set(defaults):
            return VariableSet.of(defaults)
    return VariableSet.of(sorted(found))


def parse_monomial(text: str, variables: VariableSet) -> Monomial:
    powers: Dict[str, int] = {}
    for name, exp in _factor_powers(text):
        powers[name] = powers.get(name, 0) + exp
    try:
        return Monomial.from_powers(variables, powers)
    except StciError as exc:
        raise ParseError(f"in monomial '{text}': {exc}") from exc


def parse_matrix(text: str, variables: Optional[VariableSet] = None) -> MonomialMatrix:
    """
    Parse 'e11,e12,...;e21,e22,...' into a MonomialMatrix.

    Args:
        text: Matrix text
        variables: Variable set to parse against; inferred from the names when None

    Returns:
        MonomialMatrix over the given or inferred variables
    """
    rows = [row.split(",") for row in text.strip().split(";")]
    if variables is None:
        names = [name for row in rows for cell in row for name, _ in _factor_powers(cell)]
        variables = infer_variables(names)
    try:
        matrix = MonomialMatrix(tuple(tuple(parse_monomial(cell, variables) for cell in row) for row in rows))
    except ParseError:
        raise
    except StciError as exc:
        raise ParseError(f"bad matrix '{text}': {exc}") from exc
    logger.debug("parsed {}x{} matrix over {}", 2, matrix.cols, variables)
    return matrix


def parse_polynomial(text: str, variables: VariableSet) -> SparsePolynomial:
    """
    Parse a signed sum of terms, each an optional integer coefficient followed by
    '*'-separated factors.
    """
    compact = text.replace(" ", "")
    if not compact:
        raise ParseError("empty polynomial")
    terms = []
    position = 0
    for match in _TERM.finditer(compact):
        if match.start() != position:
            raise ParseError(f"cannot parse polynomial '{text}'")
        position = match.end()
        sign = -1 if match.group(1) == "-" else 1
        factors = match.group(2).split(RENDER_CONFIG["times_symbol"])
        coeff = 1
        if factors[0].isdigit():
            coeff = int(factors.pop(0))
        body = RENDER_CONFIG["times_symbol"].join(factors) if factors else "1"
        terms.append((parse_monomial(body, variables).exponents, sign * coeff))
    if position != len(compact):
        raise ParseError(f"cannot parse polynomial '{text}'")
    return SparsePolynomial.from_terms(variables, terms)
