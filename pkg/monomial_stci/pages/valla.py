"""
The valla command: explicit (f, g) with optional curve and finite-field checks.
"""

from argparse import Namespace
from typing import List

from ..algebra.matrices import all_2minors
from ..curves.construction import symbolic_vanishes
from ..data.reports import CheckResult, PolynomialPayload, RunReport
from ..determinantal.valla import valla_fg, valla_matrix, valla_variables
from ..oracle.fields import build_field
from ..oracle.varieties import check_variety_equality, nonzero_generators
from .common import direct_comparison, echo_input, finalize, resolve_primes


def curve_checks(f, g, minors, exponents) -> List[CheckResult]:
    """f, g and each minor of the matrix substituted by (t^alpha, t^beta, t^gamma)."""
    images = [(e,) for e in exponents]
    checks = []
    for name, poly in [("f", f), ("g", g)] + [(f"D{i}{j}", value) for i, j, value in minors]:
        report = symbolic_vanishes(poly, images, subject=f"{name} = {poly.render()}")
        checks.extend(report.checks)
    return checks


def run_valla(args: Namespace) -> RunReport:
    exponents = (args.m, args.n, args.p, args.r, args.s, args.u)
    variables = valla_variables(args.variables)
    f, g = valla_fg(*exponents, variables=variables)
    matrix = valla_matrix(*exponents, variables=variables)
    minors = [(i, j, value) for i, j, value in all_2minors(matrix)]

    report = RunReport(
        command="valla",
        input=echo_input(args),
        polynomials={"f": PolynomialPayload.from_value(f), "g": PolynomialPayload.from_value(g)},
    )
    if args.check_curve:
        report.checks = curve_checks(f, g, minors, args.check_curve)
    if args.prime:
        J = nonzero_generators(value for _, _, value in minors)
        for p in resolve_primes(args.prime):
            comparison = check_variety_equality(
                J, [f, g], build_field(p, 1), left_label="V(J)", right_label="V(f,g)"
            )
            report.oracle.append(direct_comparison("V(J) = V(f,g)", p, comparison))
    return finalize(report)
