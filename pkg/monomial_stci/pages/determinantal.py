"""
Matrix commands: prop1 (column reduction) and classify (forms i-ix).
"""

from argparse import Namespace
from typing import List, Optional

from loguru import logger

from ..algebra.matrices import MonomialMatrix, all_2minors
from ..algebra.monomials import VariableSet
from ..algebra.parsing import parse_matrix
from ..data.reports import CheckResult, FormPayload, OracleReport, ReductionPayload, RunReport
from ..determinantal.forms import FormMatch, classify_form, matched_forms
from ..determinantal.radical import (
    RadicalReduction,
    column_ideal_witnesses,
    find_reducing_columns,
    radical_hypothesis,
)
from ..oracle.fields import build_field
from ..oracle.varieties import check_variety_equality, nonzero_generators
from .common import direct_comparison, echo_input, finalize, resolve_primes


def _matrix_from_args(args: Namespace) -> MonomialMatrix:
    variables: Optional[VariableSet] = VariableSet.of(args.variables) if args.variables else None
    return parse_matrix(args.matrix, variables)


def reduction_payload(reduction: RadicalReduction) -> ReductionPayload:
    return ReductionPayload(
        column=reduction.column,
        holds=reduction.holds,
        generators=reduction.describe_generators(),
        evidence=[e.describe() for e in reduction.evidence],
    )


def reduction_oracle(A: MonomialMatrix, reduction: RadicalReduction, primes: List[int]) -> List[OracleReport]:
    """V(J) against V(J_k) over every prime, all coordinates free."""
    full = nonzero_generators(value for _, _, value in all_2minors(A))
    reduced = nonzero_generators(value for _, _, value in reduction.generators)
    subject = f"V(J) = V(J_{reduction.column})"
    reports = []
    for p in primes:
        comparison = check_variety_equality(
            full, reduced, build_field(p, 1), left_label="V(J)", right_label=f"V(J_{reduction.column})"
        )
        reports.append(direct_comparison(subject, p, comparison))
    return reports


def soundness_check(A: MonomialMatrix, reduction: RadicalReduction) -> CheckResult:
    witnesses = column_ideal_witnesses(reduction, A)
    first, second = A.column(reduction.column)
    return CheckResult(
        name=f"J_{reduction.column} in ({first}, {second})",
        passed=not witnesses,
        witnesses=witnesses,
    )


def run_prop1(args: Namespace) -> RunReport:
    A = _matrix_from_args(args)
    if args.column is not None:
        reductions = [radical_hypothesis(A, args.column)]
    else:
        reductions = find_reducing_columns(A)
    logger.info("columns where the reduction holds: {}", [r.column for r in reductions if r.holds])

    report = RunReport(
        command="prop1",
        input=echo_input(args),
        reductions=[reduction_payload(r) for r in reductions],
        checks=[soundness_check(A, r) for r in reductions],
    )
    if args.oracle:
        primes = resolve_primes(args.prime)
        for reduction in reductions:
            if reduction.holds:
                report.oracle.extend(reduction_oracle(A, reduction, primes))
    return finalize(report)


def form_payload(match: FormMatch) -> FormPayload:
    return FormPayload(
        form=match.form,
        column_order=list(match.column_order),
        rows_swapped=match.rows_swapped,
        bijection=dict(match.bijection),
        cd_interchanged=match.cd_interchanged,
        exponents=dict(match.exponents),
        applicable=[a.as_dict() for a in match.applicable],
        reason=match.reason,
    )


def _no_match(A: MonomialMatrix) -> FormPayload:
    return FormPayload(
        form=None,
        column_order=[],
        rows_swapped=False,
        bijection={},
        cd_interchanged=False,
        exponents={},
        applicable=[],
        reason=f"no form matched: {A.render()} fits none of the nine shapes under any column order, "
        "row order or renaming",
    )


def run_classify(args: Namespace) -> RunReport:
    A = _matrix_from_args(args)
    matches = classify_form(A)
    forms = [form_payload(m) for m in matches] or [_no_match(A)]

    # every match must rebuild the input exactly
    checks = [
        CheckResult(
            name=f"form {m.form} rebuilds the matrix",
            passed=m.instantiate(A.variables).render() == A.render(),
            lhs=m.instantiate(A.variables).render(),
            rhs=A.render(),
        )
        for m in matches
        if m.form is not None
    ]
    logger.info("matched forms: {}", matched_forms(matches) or "none")
    report = RunReport(command="classify", input=echo_input(args), forms=forms, checks=checks)
    return finalize(report)
