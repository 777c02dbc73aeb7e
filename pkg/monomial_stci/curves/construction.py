"""
Binomials, the 2x3 monomial matrix and its minors for a projective monomial curve.

For params (delta, eps1, eps2):

    f  = x1^dstar - x0^e1star * x3^f1star
    f1 = x1^m     - x0^n * x2^p
    f2 = x2^u     - x1^v * x3^w

and the matrix A whose minors satisfy Delta12 = f, Delta13 = f1. The curve is
cut out set-theoretically by (f, f1, f2) and by (M1, M2, f2), where M2 = Delta23
and M1 is Delta13 or Delta12 depending on the case.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional, Sequence, Tuple, Union

from loguru import logger

from ..algebra.matrices import MonomialMatrix, minor_2x2
from ..algebra.monomials import Binomial, Monomial, VariableSet, ZeroMinor
from ..algebra.polynomials import SparsePolynomial, as_polynomial
from ..config.settings import RENDER_CONFIG
from ..data.reports import CheckResult, VerificationReport
from ..exceptions import DimensionMismatchError, InvalidMatrixError, StciError
from .params import CoordinateRelabeling, ProjectiveCurveParams

PolynomialLike = Union[SparsePolynomial, Binomial, ZeroMinor]


class CaseTag(str, Enum):
    """Which of e1star vs n and dstar vs m is larger."""

    I = "I"
    II = "II"
    III = "III"
    IV = "IV"


def curve_variables(relabeling: Optional[CoordinateRelabeling] = None, names: Sequence[str] = None) -> VariableSet:
    """x0..x3 (or the given names) shown in the user's coordinate order."""
    base = list(names or RENDER_CONFIG["curve_variables"])
    if len(base) != 4:
        raise DimensionMismatchError(f"a curve in P^3 needs 4 variable names, got {len(base)}")
    if relabeling is None:
        return VariableSet.of(base)
    return VariableSet.of(base).relabeled(relabeling.permutation)


def _mono(variables: VariableSet, x0: int = 0, x1: int = 0, x2: int = 0, x3: int = 0) -> Monomial:
    return Monomial(variables, (x0, x1, x2, x3))


def binomial_f(params: ProjectiveCurveParams, variables: VariableSet = None) -> Binomial:
    variables = variables or curve_variables()
    return Binomial.from_terms(
        _mono(variables, x1=params.dstar), _mono(variables, x0=params.e1star, x3=params.f1star)
    )


def binomial_f1(params: ProjectiveCurveParams, variables: VariableSet = None) -> Binomial:
    variables = variables or curve_variables()
    return Binomial.from_terms(_mono(variables, x1=params.m), _mono(variables, x0=params.n, x2=params.p))


def binomial_f2(params: ProjectiveCurveParams, variables: VariableSet = None) -> Binomial:
    variables = variables or curve_variables()
    return Binomial.from_terms(_mono(variables, x2=params.u), _mono(variables, x1=params.v, x3=params.w))


def build_matrix(params: ProjectiveCurveParams, variables: VariableSet = None) -> MonomialMatrix:
    """
    The 2x3 matrix

        x1^min(dstar,m)      x0^max(e1star-n,0)*x3^f1star   x0^max(n-e1star,0)*x2^p
        x0^min(e1star,n)     x1^max(dstar-m,0)              x1^max(m-dstar,0)
    """
    variables = variables or curve_variables()
    q = params
    top = (
        _mono(variables, x1=min(q.dstar, q.m)),
        _mono(variables, x0=max(q.e1star - q.n, 0), x3=q.f1star),
        _mono(variables, x0=max(q.n - q.e1star, 0), x2=q.p),
    )
    bottom = (
        _mono(variables, x0=min(q.e1star, q.n)),
        _mono(variables, x1=max(q.dstar - q.m, 0)),
        _mono(variables, x1=max(q.m - q.dstar, 0)),
    )
    return MonomialMatrix((top, bottom))


def classify_case(params: ProjectiveCurveParams) -> CaseTag:
    if params.e1star > params.n:
        return CaseTag.I if params.dstar > params.m else CaseTag.II
    return CaseTag.III if params.dstar > params.m else CaseTag.IV


def _binomial_minor(matrix: MonomialMatrix, i: int, j: int) -> Binomial:
    minor = minor_2x2(matrix, i, j)
    if isinstance(minor, ZeroMinor):
        raise InvalidMatrixError(f"minor ({i},{j}) of the curve matrix vanishes")
    return minor


def select_minors(params: ProjectiveCurveParams, variables: VariableSet = None) -> Tuple[Binomial, Binomial]:
    """(Delta13, Delta23) in cases I and III, (Delta12, Delta23) in cases II and IV."""
    matrix = build_matrix(params, variables)
    case = classify_case(params)
    first = (1, 3) if case in (CaseTag.I, CaseTag.III) else (1, 2)
    return _binomial_minor(matrix, *first), _binomial_minor(matrix, 2, 3)


def affine_specialize(poly: PolynomialLike) -> SparsePolynomial:
    """Set x0 = 1 (drop the first exponent) and merge like terms."""
    poly = as_polynomial(poly)
    return poly.map_exponents(lambda e: (0,) + tuple(e[1:]))


@dataclass(frozen=True)
class DefiningSystem:
    f: Binomial
    f1: Binomial
    f2: Binomial
    matrix: MonomialMatrix
    case: CaseTag
    M1: Binomial
    M2: Binomial
    affine: bool
    variant: str

    @property
    def generators(self) -> Tuple[Binomial, Binomial, Binomial]:
        """The three projective generators of the chosen variant."""
        if self.variant == "binomials":
            return self.f, self.f1, self.f2
        return self.M1, self.M2, self.f2

    @property
    def members(self) -> Tuple[PolynomialLike, ...]:
        """Generators as emitted: specialized at x0 = 1 in affine mode."""
        if self.affine:
            return tuple(affine_specialize(g) for g in self.generators)
        return self.generators

    def named_members(self) -> Dict[str, PolynomialLike]:
        names = ("f", "f1", "f2") if self.variant == "binomials" else ("M1", "M2", "f2")
        return dict(zip(names, self.members))


def defining_triple(
    params: ProjectiveCurveParams,
    variant: str = "minors",
    affine: bool = False,
    variables: VariableSet = None,
) -> DefiningSystem:
    """
    Build the whole system for a curve.

    Args:
        params: Curve parameters
        variant: "minors" for (M1, M2, f2) or "binomials" for (f, f1, f2)
        affine: Specialize the emitted members at x0 = 1
        variables: Display variables; x0..x3 by default

    Returns:
        DefiningSystem
    """
    if variant not in ("minors", "binomials"):
        raise StciError(f"unknown variant '{variant}' (expected minors or binomials)")
    variables = variables or curve_variables()
    matrix = build_matrix(params, variables)
    M1, M2 = select_minors(params, variables)
    system = DefiningSystem(
        f=binomial_f(params, variables),
        f1=binomial_f1(params, variables),
        f2=binomial_f2(params, variables),
        matrix=matrix,
        case=classify_case(params),
        M1=M1,
        M2=M2,
        affine=affine,
        variant=variant,
    )
    logger.debug("case {} system for ({}, {}, {})", system.case.value, params.delta, params.eps1, params.eps2)
    return system


def contained_pairs(params: ProjectiveCurveParams, variables: VariableSet = None) -> Dict[str, Tuple[Binomial, Binomial]]:
    """Two binomial pairs contained in I(C): the minors (M1, M2) and (f1, f)."""
    return {
        "minors": select_minors(params, variables),
        "binomials": (binomial_f1(params, variables), binomial_f(params, variables)),
    }


def _render_parameter_term(exponents: Tuple[int, ...], coeff: int, names: Sequence[str]) -> str:
    body = "*".join(
        name if e == 1 else f"{name}^{e}" for name, e in zip(names, exponents) if e > 0
    ) or "1"
    if coeff == 1:
        return body
    if coeff == -1:
        return f"-{body}"
    return f"{coeff}*{body}"


def symbolic_vanishes(
    poly: PolynomialLike,
    images: Sequence[Sequence[int]],
    subject: str = "",
    parameter_names: Sequence[str] = ("t",),
) -> VerificationReport:
    """
    Substitute every variable by a monomial in the parameters and collect terms.

    Args:
        poly: Polynomial to test
        images: Parameter exponent vector for each variable
        subject: Label for the report
        parameter_names: Display names of the parameters

    Returns:
        VerificationReport that passes iff everything cancels; surviving terms
        are listed as witnesses
    """
    value = as_polynomial(poly)
    survivors = value.substitute_monomials(images)
    witnesses = [
        _render_parameter_term(e, c, parameter_names)
        for e, c in sorted(survivors.items(), key=lambda t: t[0], reverse=True)
    ]
    label = subject or poly.render()
    check = CheckResult(
        name=f"vanishes: {label}",
        passed=not survivors,
        detail=f"{len(value)} terms, {len(survivors)} left after substitution",
        witnesses=witnesses,
    )
    return VerificationReport.from_checks(label, [check])


def symbolic_vanishes_on_curve(
    poly: PolynomialLike, params: ProjectiveCurveParams, affine: bool = False, subject: str = ""
) -> VerificationReport:
    """
    Substitution test against x_i -> xi^a_i * omega^b_i.

    With affine=True the chart xi = 1 is used instead, i.e. x0 -> 1 and
    x_i -> t^phi_i, which is the test for x0-specialized polynomials.
    """
    pairs = params.parametrization().as_images()
    if affine:
        return symbolic_vanishes(poly, [(b,) for _, b in pairs], subject, ("t",))
    return symbolic_vanishes(poly, pairs, subject, ("xi", "omega"))
