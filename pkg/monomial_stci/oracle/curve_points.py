"""
GF(p)-points of a projective monomial curve and comparison with a variety.

The curve's GF(p)-points over the algebraic closure are collected degree by
degree: a parameter (1:t) with t in GF(p^k) contributes when its image has all
coordinates in GF(p). Two strategies produce the same set:

* enumerate: walk GF(p^k) and keep images passing the Frobenius test e^p == e;
* power-residue: the image of (1:t) depends only on s = t^g with
  g = gcd(phi1, phi2, delta), and lies in GF(p) iff s does, so it suffices to
  list the s in GF(p)* that have a g-th root in GF(p^k).
"""

from math import gcd
from typing import FrozenSet, Optional, Sequence, Set, Tuple

from loguru import logger

from ..config.settings import ORACLE_CONFIG
from ..curves.params import CoordinateRelabeling, ProjectiveCurveParams
from ..data.cache_manager import get_cache_manager
from ..data.reports import OracleReport
from ..utils.helpers import gcd_all, log_performance
from .fields import build_field
from .varieties import affine_variety, compare_sets, projective_variety

IntPoint = Tuple[int, ...]

STRATEGIES = ("auto", "enumerate", "power-residue")


def _enumerate_degree(params: ProjectiveCurveParams, p: int, k: int) -> Set[IntPoint]:
    field = build_field(p, k)
    found: Set[IntPoint] = set()
    for t in field.elements():
        image = (field.one, field.pow(t, params.phi1), field.pow(t, params.phi2), field.pow(t, params.delta))
        if all(field.is_in_prime_subfield(c) for c in image):
            found.add(tuple(field.to_int(c) for c in image))
    return found


def _power_residue_degree(params: ProjectiveCurveParams, p: int, k: int) -> Set[IntPoint]:
    g = gcd_all((params.phi1, params.phi2, params.delta))
    q = p ** k
    root_test = (q - 1) // gcd(q - 1, g)
    found: Set[IntPoint] = {(1, 0, 0, 0)}
    for s in range(1, p):
        if pow(s, root_test, p) == 1:
            found.add((1, pow(s, params.phi1 // g, p), pow(s, params.phi2 // g, p), pow(s, params.delta // g, p)))
    return found


def curve_points_of_degree(params: ProjectiveCurveParams, p: int, k: int, strategy: str = "auto") -> FrozenSet[IntPoint]:
    """GF(p)-points with a parameter in GF(p^k), plus (0:0:0:1)."""
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy '{strategy}' (expected one of {', '.join(STRATEGIES)})")
    if strategy == "auto":
        strategy = "enumerate" if p ** k <= ORACLE_CONFIG["brute_force_limit"] else "power-residue"

    def compute() -> FrozenSet[IntPoint]:
        points = _enumerate_degree(params, p, k) if strategy == "enumerate" else _power_residue_degree(params, p, k)
        points.add((0, 0, 0, 1))
        return frozenset(points)

    key = ("curve", params.delta, params.eps1, params.eps2, p, k, strategy)
    return get_cache_manager().get_or_compute("points", key, compute)


@log_performance
def curve_points(params: ProjectiveCurveParams, p: int, max_ext: int, strategy: str = "auto") -> FrozenSet[IntPoint]:
    """
    Union over k = 1..max_ext of the curve's GF(p)-points with parameters in GF(p^k).

    Args:
        params: Curve parameters
        p: Prime
        max_ext: Largest extension degree K, at least 1
        strategy: "enumerate", "power-residue" or "auto" (by field size)

    Returns:
        Normalized projective points with int coordinates
    """
    if max_ext < 1:
        raise ValueError(f"max_ext must be at least 1, got {max_ext}")
    points: Set[IntPoint] = set()
    for k in range(1, max_ext + 1):
        points |= curve_points_of_degree(params, p, k, strategy)
    return frozenset(points)


def affine_curve_points(params: ProjectiveCurveParams, p: int, max_ext: int, strategy: str = "auto") -> FrozenSet[IntPoint]:
    """The x0 != 0 chart of curve_points with x0 dropped."""
    return frozenset(pt[1:] for pt in curve_points(params, p, max_ext, strategy) if pt[0] == 1)


def check_curve_equality(
    polys: Sequence,
    params: ProjectiveCurveParams,
    p: int,
    max_ext: Optional[int] = None,
    ext_cap: Optional[int] = None,
    auto_escalate: Optional[bool] = None,
    affine: bool = False,
    subject: str = "V = C",
    relabeling: Optional[CoordinateRelabeling] = None,
) -> OracleReport:
    """
    Compare V(polys)(GF(p)) with the curve's GF(p)-points, raising K from 1.

    Stops at the first K where the sets agree. Without auto-escalation K stops
    at max_ext, otherwise at ext_cap. A curve point outside V means the system
    does not contain the curve and is reported as failed.

    Args:
        polys: System over x0..x3 (projective) or x0-specialized (affine=True)
        params: Curve parameters
        p: Prime
        max_ext, ext_cap, auto_escalate: Override ORACLE_CONFIG
        relabeling: Lists witness points in the user's coordinates

    Returns:
        OracleReport with status equal, inconclusive or failed
    """
    max_ext = max_ext or ORACLE_CONFIG["max_ext"]
    ext_cap = max(ext_cap or ORACLE_CONFIG["ext_cap"], max_ext)
    auto_escalate = ORACLE_CONFIG["auto_escalate"] if auto_escalate is None else auto_escalate
    limit = ext_cap if auto_escalate else max_ext

    field = build_field(p, 1)
    variety = affine_variety(polys, field, free=(1, 2, 3)) if affine else projective_variety(polys, field)
    labels = ("V", "C")
    report = None
    for k in range(1, limit + 1):
        curve = affine_curve_points(params, p, k) if affine else curve_points(params, p, k)
        report = compare_sets(variety, curve, field, *labels, projective=not affine, relabeling=relabeling)
        if report.right_minus_left:
            logger.warning("{}: curve points outside V over GF({}): {}", subject, p, report.right_minus_left[:5])
            return OracleReport(subject=subject, prime=p, status="failed", ext_degree=k, comparison=report)
        if report.equal:
            logger.info("{}: equal over GF({}) with K={}", subject, p, k)
            return OracleReport(subject=subject, prime=p, status="equal", ext_degree=k, comparison=report)
    logger.warning("{}: {} V-points unmatched over GF({}) at K={}", subject, len(report.left_minus_right), p, limit)
    return OracleReport(subject=subject, prime=p, status="inconclusive", ext_degree=limit, comparison=report)
