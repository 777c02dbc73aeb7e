"""
Exponent data of a projective monomial curve in P^3.

The curve is the image of (xi:omega) -> (xi^delta : xi^eps1 omega^phi1 :
xi^eps2 omega^phi2 : omega^delta) with phi_i = delta - eps_i. Every quantity the
binomial and matrix constructions need is derived here once and carried in a
ProjectiveCurveParams.
"""

from dataclasses import dataclass
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from ..data.reports import CheckResult, VerificationReport
from ..exceptions import InvalidCurveParametersError
from ..utils.helpers import gcd_all, validate_affine_exponents, validate_curve_exponents


@dataclass(frozen=True)
class ParametrizationExponents:
    """(xi-exponent, omega-exponent) for each of x0, x1, x2, x3."""

    pairs: Tuple[Tuple[int, int], ...]

    @property
    def degree(self) -> int:
        return sum(self.pairs[0])

    @property
    def is_homogeneous(self) -> bool:
        return len({a + b for a, b in self.pairs}) == 1

    def as_images(self) -> Tuple[Tuple[int, int], ...]:
        return self.pairs


@dataclass(frozen=True)
class CoordinateRelabeling:
    """
    How internal coordinates map to the user's coordinates.

    permutation[i] is the index of the user's coordinate shown for internal
    coordinate i; `exchanged` records a xi <-> omega swap.
    """

    permutation: Tuple[int, ...] = (0, 1, 2, 3)
    exchanged: bool = False

    @property
    def is_identity(self) -> bool:
        return self.permutation == tuple(range(len(self.permutation)))

    def inverse(self) -> "CoordinateRelabeling":
        inverse = [0] * len(self.permutation)
        for i, j in enumerate(self.permutation):
            inverse[j] = i
        return CoordinateRelabeling(tuple(inverse), self.exchanged)

    def apply_to_names(self, names: Sequence) -> List:
        return [names[j] for j in self.permutation]

    def to_user(self, point: Sequence) -> Tuple:
        """Coordinates of an internal point, listed in the user's order."""
        return tuple(self.inverse().apply_to_names(point))


XI_OMEGA_EXCHANGE = CoordinateRelabeling((3, 1, 2, 0), True)


@dataclass(frozen=True)
class ProjectiveCurveParams:
    delta: int
    eps1: int
    eps2: int
    phi1: int
    phi2: int
    dgcd: int
    egcd: int
    fgcd: int
    dstar: int
    e1star: int
    f1star: int
    m: int
    p: int
    n: int
    u: int
    v: int
    w: int

    def parametrization(self) -> ParametrizationExponents:
        return ParametrizationExponents(
            ((self.delta, 0), (self.eps1, self.phi1), (self.eps2, self.phi2), (0, self.delta))
        )

    def as_dict(self) -> Dict[str, int]:
        return dict(self.__dict__)


def derive_params(delta: int, eps1: int, eps2: int) -> ProjectiveCurveParams:
    """
    Derive every curve quantity from (delta, eps1, eps2).

    Args:
        delta: Degree of the parametrization
        eps1: xi-exponent of x1
        eps2: xi-exponent of x2, at most eps1

    Returns:
        ProjectiveCurveParams with all derived fields

    Raises:
        InvalidCurveParametersError: unless 0 < eps2 <= eps1 < delta
    """
    is_valid, message = validate_curve_exponents(delta, eps1, eps2)
    if not is_valid:
        raise InvalidCurveParametersError(message)
    if eps2 > eps1:
        raise InvalidCurveParametersError(
            f"eps2 must not exceed eps1 (got eps1={eps1}, eps2={eps2}); normalize the orientation first"
        )

    phi1, phi2 = delta - eps1, delta - eps2
    dgcd = gcd(delta, eps1)
    egcd = gcd(eps1, eps2)
    fgcd = gcd(phi1, phi2)
    m, p = phi2 // fgcd, phi1 // fgcd
    u, v = eps1 // egcd, eps2 // egcd
    return ProjectiveCurveParams(
        delta=delta,
        eps1=eps1,
        eps2=eps2,
        phi1=phi1,
        phi2=phi2,
        dgcd=dgcd,
        egcd=egcd,
        fgcd=fgcd,
        dstar=delta // dgcd,
        e1star=eps1 // dgcd,
        f1star=phi1 // dgcd,
        m=m,
        p=p,
        n=m - p,
        u=u,
        v=v,
        w=u - v,
    )


def normalize_orientation(delta: int, e_x1: int, e_x2: int) -> Tuple[ProjectiveCurveParams, CoordinateRelabeling]:
    """
    Bring the xi-exponents into the order eps1 >= eps2.

    When e_x1 < e_x2 the parameters xi and omega are exchanged: each exponent
    e becomes delta - e and x0, x3 trade places.
    """
    for name, value in (("e_x1", e_x1), ("e_x2", e_x2)):
        if not 0 < value < delta:
            raise InvalidCurveParametersError(f"{name} must lie strictly between 0 and delta={delta}, got {value}")
    if e_x1 >= e_x2:
        return derive_params(delta, e_x1, e_x2), CoordinateRelabeling()
    logger.info("exchanging xi and omega: ({}, {}) -> ({}, {})", e_x1, e_x2, delta - e_x1, delta - e_x2)
    return derive_params(delta, delta - e_x1, delta - e_x2), XI_OMEGA_EXCHANGE


def sort_affine_exponents(a: int, b: int, c: int) -> Tuple[Tuple[int, int, int], CoordinateRelabeling]:
    """
    Sort affine exponents ascending and record which user coordinate each
    sorted position came from.
    """
    is_valid, message = validate_affine_exponents((a, b, c))
    if not is_valid:
        raise InvalidCurveParametersError(message)
    order = sorted(range(3), key=lambda i: (a, b, c)[i])
    ordered = tuple((a, b, c)[i] for i in order)
    return ordered, CoordinateRelabeling((0,) + tuple(i + 1 for i in order))


def from_affine(a: int, b: int, c: int) -> Tuple[ProjectiveCurveParams, bool]:
    """
    Homogenize the affine curve (t^a, t^b, t^c), 0 < a < b < c.

    Returns:
        (params with delta=c, phi1=a, phi2=b, affine flag True)
    """
    is_valid, message = validate_affine_exponents((a, b, c))
    if not is_valid:
        raise InvalidCurveParametersError(message)
    if not a < b < c:
        raise InvalidCurveParametersError(
            f"affine exponents must be sorted ascending, got ({a}, {b}, {c}); use sort_affine_exponents"
        )
    return derive_params(c, c - a, c - b), True


def reduce_common_gcd(delta: int, eps1: int, eps2: int) -> Tuple[Tuple[int, int, int], int]:
    """Divide out gcd(delta, eps1, eps2); returns the reduced triple and the divisor."""
    g = gcd_all((delta, eps1, eps2)) or 1
    return (delta // g, eps1 // g, eps2 // g), g


def _identity(name: str, lhs: int, rhs: int, lhs_text: str, rhs_text: str) -> CheckResult:
    return CheckResult(
        name=name, passed=lhs == rhs, lhs=f"{lhs_text} = {lhs}", rhs=f"{rhs_text} = {rhs}"
    )


def check_identities(params: ProjectiveCurveParams) -> VerificationReport:
    """
    Check the integer identities behind f, f1, f2 lying on the curve.

    Each check lists both sides; a failure means a derivation bug.
    """
    q = params
    checks = [
        _identity("eps1*dstar = e1star*delta", q.eps1 * q.dstar, q.e1star * q.delta,
                  f"{q.eps1}*{q.dstar}", f"{q.e1star}*{q.delta}"),
        _identity("phi1*dstar = f1star*delta", q.phi1 * q.dstar, q.f1star * q.delta,
                  f"{q.phi1}*{q.dstar}", f"{q.f1star}*{q.delta}"),
        _identity("eps1*m = delta*n + eps2*p", q.eps1 * q.m, q.delta * q.n + q.eps2 * q.p,
                  f"{q.eps1}*{q.m}", f"{q.delta}*{q.n} + {q.eps2}*{q.p}"),
        _identity("phi1*m = phi2*p", q.phi1 * q.m, q.phi2 * q.p,
                  f"{q.phi1}*{q.m}", f"{q.phi2}*{q.p}"),
        _identity("eps2*u = eps1*v", q.eps2 * q.u, q.eps1 * q.v,
                  f"{q.eps2}*{q.u}", f"{q.eps1}*{q.v}"),
        _identity("phi2*u = phi1*v + delta*w", q.phi2 * q.u, q.phi1 * q.v + q.delta * q.w,
                  f"{q.phi2}*{q.u}", f"{q.phi1}*{q.v} + {q.delta}*{q.w}"),
        _identity("eps1*(dstar - m) = (e1star - n)*delta - eps2*p",
                  q.eps1 * (q.dstar - q.m), (q.e1star - q.n) * q.delta - q.eps2 * q.p,
                  f"{q.eps1}*({q.dstar} - {q.m})", f"({q.e1star} - {q.n})*{q.delta} - {q.eps2}*{q.p}"),
        _identity("e1star + f1star = dstar", q.e1star + q.f1star, q.dstar,
                  f"{q.e1star} + {q.f1star}", f"{q.dstar}"),
        _identity("n + p = m", q.n + q.p, q.m, f"{q.n} + {q.p}", f"{q.m}"),
        _identity("v + w = u", q.v + q.w, q.u, f"{q.v} + {q.w}", f"{q.u}"),
        _identity("m*fgcd + v*egcd = delta", q.m * q.fgcd + q.v * q.egcd, q.delta,
                  f"{q.m}*{q.fgcd} + {q.v}*{q.egcd}", f"{q.delta}"),
        _identity("p*fgcd + u*egcd = delta", q.p * q.fgcd + q.u * q.egcd, q.delta,
                  f"{q.p}*{q.fgcd} + {q.u}*{q.egcd}", f"{q.delta}"),
        CheckResult(name="n >= 0", passed=q.n >= 0, lhs=f"n = {q.n}"),
        CheckResult(name="w >= 0", passed=q.w >= 0, lhs=f"w = {q.w}"),
    ]
    report = VerificationReport.from_checks(f"identities for ({q.delta}, {q.eps1}, {q.eps2})", checks)
    if not report.passed:
        logger.error("identity failures for {}: {}", (q.delta, q.eps1, q.eps2), [c.name for c in report.failures])
    return report


@dataclass(frozen=True)
class CurveSetup:
    """Validated curve input as consumed by the command pages."""

    params: ProjectiveCurveParams
    relabeling: CoordinateRelabeling
    affine: bool
    common_divisor: int = 1


def prepare_curve(
    delta: Optional[int] = None,
    eps1: Optional[int] = None,
    eps2: Optional[int] = None,
    affine: Optional[Sequence[int]] = None,
    reduce_gcd: bool = False,
) -> CurveSetup:
    """
    Validate projective or affine curve input and normalize it.

    Args:
        delta, eps1, eps2: Projective exponents, in any order of eps1 and eps2
        affine: Three affine exponents, in any order (exclusive with the above)
        reduce_gcd: Divide out gcd(delta, eps1, eps2) first

    Returns:
        CurveSetup with params, the coordinate relabeling and the affine flag
    """
    if affine is not None:
        if any(x is not None for x in (delta, eps1, eps2)):
            raise InvalidCurveParametersError("give either --affine or --delta/--eps1/--eps2, not both")
        if len(affine) != 3:
            raise InvalidCurveParametersError(f"an affine curve needs exactly 3 exponents, got {len(affine)}")
        (a, b, c), relabeling = sort_affine_exponents(*affine)
        divisor = 1
        if reduce_gcd:
            (c, ea, eb), divisor = reduce_common_gcd(c, c - a, c - b)
            a, b = c - ea, c - eb
        params, _ = from_affine(a, b, c)
        return CurveSetup(params, relabeling, True, divisor)

    if any(x is None for x in (delta, eps1, eps2)):
        raise InvalidCurveParametersError("a projective curve needs --delta, --eps1 and --eps2")
    divisor = 1
    if reduce_gcd:
        (delta, eps1, eps2), divisor = reduce_common_gcd(delta, eps1, eps2)
    is_valid, message = validate_curve_exponents(delta, eps1, eps2)
    if not is_valid:
        raise InvalidCurveParametersError(message)
    params, relabeling = normalize_orientation(delta, eps1, eps2)
    return CurveSetup(params, relabeling, False, divisor)
