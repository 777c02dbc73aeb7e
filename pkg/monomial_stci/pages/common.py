"""
Helpers shared by the command pages: input echo, curve setup, primes and exit status.
"""

from argparse import Namespace
from typing import Any, Dict, List, Optional

from ..config.settings import EXIT_CODES, ORACLE_CONFIG
from ..curves.construction import curve_variables
from ..curves.params import CurveSetup, prepare_curve
from ..data.reports import EqualityReport, OracleReport, RunReport
from ..exceptions import StciError
from ..utils.helpers import validate_primes

_GLOBAL_FLAGS = ("command", "format", "verbose", "quiet")


def echo_input(args: Namespace) -> Dict[str, Any]:
    """Command arguments as given, minus the output flags."""
    return {k: v for k, v in sorted(vars(args).items()) if k not in _GLOBAL_FLAGS}


def curve_setup_from_args(args: Namespace) -> CurveSetup:
    return prepare_curve(
        delta=args.delta,
        eps1=args.eps1,
        eps2=args.eps2,
        affine=args.affine,
        reduce_gcd=args.reduce_gcd,
    )


def display_variables(args: Namespace, setup: CurveSetup):
    """x0..x3 (or --variables) in the user's coordinate order."""
    return curve_variables(setup.relabeling, args.variables)


def params_dict(setup: CurveSetup) -> Dict[str, int]:
    params = setup.params.as_dict()
    if setup.common_divisor != 1:
        params["common_divisor"] = setup.common_divisor
    return params


def resolve_primes(primes: Optional[List[int]]) -> List[int]:
    """--prime values or the configured defaults, validated."""
    chosen = list(primes) if primes else list(ORACLE_CONFIG["primes"])
    is_valid, message = validate_primes(chosen)
    if not is_valid:
        raise StciError(message)
    return chosen


def resolve_max_ext(value: Optional[int]) -> int:
    max_ext = ORACLE_CONFIG["max_ext"] if value is None else value
    if max_ext < 1:
        raise StciError(f"--max-ext must be at least 1, got {max_ext}")
    return max_ext


def direct_comparison(subject: str, prime: int, comparison: EqualityReport) -> OracleReport:
    """An oracle entry for a single-field comparison of two systems."""
    return OracleReport(
        subject=subject,
        prime=prime,
        status="equal" if comparison.equal else "failed",
        ext_degree=1,
        comparison=comparison,
    )


def finalize(report: RunReport) -> RunReport:
    """
    Set status and exit code: any failed check or oracle entry is a failure,
    otherwise any inconclusive oracle entry makes the run inconclusive.
    """
    failed = any(not c.passed for c in report.checks) or any(o.status == "failed" for o in report.oracle)
    inconclusive = any(o.status == "inconclusive" for o in report.oracle)
    if failed:
        status = "failure"
    elif inconclusive:
        status = "inconclusive"
    else:
        status = "pass"
    report.status = status
    report.exit_code = EXIT_CODES[status]
    return report
