"""
Curve commands: derive, binomials and verify.
"""

from argparse import Namespace
from typing import List

from loguru import logger

from ..algebra.matrices import all_2minors, minor_2x2
from ..algebra.parsing import parse_polynomial
from ..algebra.polynomials import as_polynomial
from ..config.settings import ORACLE_CONFIG
from ..curves.construction import (
    DefiningSystem,
    affine_specialize,
    contained_pairs,
    defining_triple,
    symbolic_vanishes_on_curve,
)
from ..curves.params import CurveSetup, check_identities
from ..data.reports import CheckResult, MatrixPayload, OracleReport, PolynomialPayload, RunReport, SystemPayload
from ..determinantal.radical import is_simple
from ..oracle.curve_points import check_curve_equality
from ..oracle.fields import build_field
from ..oracle.varieties import check_variety_equality, nonzero_generators
from .common import (
    curve_setup_from_args,
    direct_comparison,
    display_variables,
    echo_input,
    finalize,
    params_dict,
    resolve_max_ext,
    resolve_primes,
)


def _shown(value, affine: bool):
    return affine_specialize(value) if affine else value


def system_payload(system: DefiningSystem) -> SystemPayload:
    """Binomials and minors as emitted; x0 is set to 1 throughout in affine mode."""
    affine = system.affine
    return SystemPayload(
        f=PolynomialPayload.from_value(_shown(system.f, affine)),
        f1=PolynomialPayload.from_value(_shown(system.f1, affine)),
        f2=PolynomialPayload.from_value(_shown(system.f2, affine)),
        matrix=MatrixPayload.from_matrix(system.matrix),
        case=system.case.value,
        M1=PolynomialPayload.from_value(_shown(system.M1, affine)),
        M2=PolynomialPayload.from_value(_shown(system.M2, affine)),
        variant=system.variant,
        affine=affine,
        members=[PolynomialPayload.from_value(m) for m in system.members],
    )


def run_derive(args: Namespace) -> RunReport:
    """Derived quantities and the integer identities behind them."""
    setup = curve_setup_from_args(args)
    report = RunReport(
        command="derive",
        input=echo_input(args),
        params=params_dict(setup),
        checks=check_identities(setup.params).checks,
    )
    return finalize(report)


def run_binomials(args: Namespace) -> RunReport:
    setup = curve_setup_from_args(args)
    system = defining_triple(setup.params, args.variant, setup.affine, display_variables(args, setup))
    report = RunReport(
        command="binomials",
        input=echo_input(args),
        params=params_dict(setup),
        system=system_payload(system),
    )
    return finalize(report)


def _equality_check(name: str, left, right) -> CheckResult:
    return CheckResult(
        name=name,
        passed=as_polynomial(left) == as_polynomial(right),
        lhs=left.render(),
        rhs=right.render(),
    )


def symbolic_checks(setup: CurveSetup, system: DefiningSystem, extra: List[str]) -> List[CheckResult]:
    """
    Every check that needs no finite field: identities, simplicity of the
    matrix, the minor identities, homogeneity and vanishing on the curve.
    """
    params = setup.params
    matrix = system.matrix
    checks = list(check_identities(params).checks)
    checks.append(CheckResult(name="matrix is simple", passed=is_simple(matrix), detail=matrix.render()))
    checks.append(_equality_check("D12 = f", minor_2x2(matrix, 1, 2), system.f))
    checks.append(_equality_check("D13 = f1", minor_2x2(matrix, 1, 3), system.f1))

    for name, binomial in (("f", system.f), ("f1", system.f1), ("f2", system.f2), ("M1", system.M1), ("M2", system.M2)):
        checks.append(CheckResult(name=f"{name} homogeneous", passed=binomial.is_homogeneous, detail=binomial.render()))

    for name, member in system.named_members().items():
        vanishing = symbolic_vanishes_on_curve(member, params, setup.affine, subject=f"{name} = {member.render()}")
        checks.extend(vanishing.checks)

    for label, pair in contained_pairs(params, matrix.variables).items():
        for binomial in pair:
            vanishing = symbolic_vanishes_on_curve(binomial, params, subject=f"{label} pair: {binomial.render()}")
            checks.extend(vanishing.checks)

    for text in extra:
        poly = parse_polynomial(text, matrix.variables)
        # extra polynomials are read in the x0 = 1 chart for affine curves
        vanishing = symbolic_vanishes_on_curve(poly, params, setup.affine, subject=f"extra: {poly.render()}")
        checks.extend(vanishing.checks)
    return checks


def oracle_checks(
    setup: CurveSetup, system: DefiningSystem, primes: List[int], max_ext: int, auto_escalate: bool
) -> List[OracleReport]:
    """
    Per prime: V(f, f1, f2) and V(M1, M2, f2) against the curve's points, and
    V(M1, M2) against the zero set of all three minors.
    """
    affine = setup.affine
    triples = {
        "V(f,f1,f2) = C": (system.f, system.f1, system.f2),
        "V(M1,M2,f2) = C": (system.M1, system.M2, system.f2),
    }
    minors = nonzero_generators(value for _, _, value in all_2minors(system.matrix))
    pair = [system.M1, system.M2]
    if affine:
        triples = {k: tuple(affine_specialize(g) for g in v) for k, v in triples.items()}
        minors = [affine_specialize(g) for g in minors]
        pair = [affine_specialize(g) for g in pair]

    reports = []
    for p in primes:
        for subject, polys in triples.items():
            reports.append(
                check_curve_equality(
                    polys,
                    setup.params,
                    p,
                    max_ext=max_ext,
                    ext_cap=max(ORACLE_CONFIG["ext_cap"], max_ext),
                    auto_escalate=auto_escalate,
                    affine=affine,
                    subject=subject,
                    relabeling=setup.relabeling,
                )
            )
        comparison = check_variety_equality(
            pair,
            minors,
            build_field(p, 1),
            projective=not affine,
            free=(1, 2, 3) if affine else None,
            left_label="V(M1,M2)",
            right_label="V(J)",
            relabeling=setup.relabeling,
        )
        reports.append(direct_comparison("V(M1,M2) = V(J)", p, comparison))
    return reports


def run_verify(args: Namespace) -> RunReport:
    setup = curve_setup_from_args(args)
    system = defining_triple(setup.params, "minors", setup.affine, display_variables(args, setup))
    report = RunReport(
        command="verify",
        input=echo_input(args),
        params=params_dict(setup),
        system=system_payload(system),
        checks=symbolic_checks(setup, system, args.extra_poly),
    )
    if args.skip_oracle:
        logger.info("oracle skipped")
    else:
        primes = resolve_primes(args.prime)
        max_ext = resolve_max_ext(args.max_ext)
        auto_escalate = ORACLE_CONFIG["auto_escalate"] and not args.no_escalate
        report.oracle = oracle_checks(setup, system, primes, max_ext, auto_escalate)
    return finalize(report)
