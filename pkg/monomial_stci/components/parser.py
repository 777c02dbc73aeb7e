"""
Command-line parser: one subcommand per command page.
"""

import argparse
from typing import List, Optional

from ..config.settings import APP_CONFIG, ORACLE_CONFIG

COMMANDS = ("derive", "binomials", "verify", "prop1", "classify", "valla")


def _names(text: str) -> List[str]:
    return [n.strip() for n in text.split(",") if n.strip()]


def _global_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--format", choices=("text", "json"), default="text", help="Output format (default: text)")
    verbosity = parent.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", "-v", action="store_true", help="Log debug messages to stderr")
    verbosity.add_argument("--quiet", "-q", action="store_true", help="Log errors only")
    parent.add_argument(
        "--variables",
        type=_names,
        default=None,
        help="Comma-separated variable names overriding x0,x1,x2,x3 (curves) or the inferred matrix names",
    )
    return parent


def _curve_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--delta", type=int, help="Degree delta of the parametrization")
    parent.add_argument("--eps1", type=int, help="xi-exponent of x1")
    parent.add_argument("--eps2", type=int, help="xi-exponent of x2")
    parent.add_argument(
        "--affine", type=int, nargs=3, metavar=("A", "B", "C"), help="Affine curve (t^A, t^B, t^C) instead"
    )
    parent.add_argument("--reduce-gcd", action="store_true", help="Divide out gcd(delta, eps1, eps2) first")
    return parent


def _oracle_options(with_ext: bool = True) -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument(
        "--prime",
        type=int,
        nargs="+",
        default=None,
        help=f"Primes for the finite-field oracle (default: {' '.join(map(str, ORACLE_CONFIG['primes']))})",
    )
    if with_ext:
        parent.add_argument(
            "--max-ext",
            type=int,
            default=None,
            help=f"Largest extension degree K before escalation (default: {ORACLE_CONFIG['max_ext']})",
        )
        parent.add_argument(
            "--no-escalate",
            action="store_true",
            help=f"Stop at --max-ext instead of escalating up to {ORACLE_CONFIG['ext_cap']}",
        )
    return parent


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with every subcommand."""
    parser = argparse.ArgumentParser(
        prog="monomial-stci",
        description="Binomial equations, monomial matrices and finite-field checks for monomial curves.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {APP_CONFIG['version']}")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    common, curve = _global_options(), _curve_options()

    subparsers.add_parser(
        "derive", parents=[common, curve], help="Derived quantities and integer identities of a curve"
    )

    binomials = subparsers.add_parser(
        "binomials", parents=[common, curve], help="Defining binomials, matrix, case and selected minors"
    )
    binomials.add_argument("--variant", choices=("minors", "binomials"), default="minors")

    verify = subparsers.add_parser(
        "verify", parents=[common, curve, _oracle_options()], help="Symbolic and finite-field verification"
    )
    verify.add_argument("--skip-oracle", action="store_true", help="Run the symbolic checks only")
    verify.add_argument(
        "--extra-poly",
        action="append",
        default=[],
        metavar="POLY",
        help="Additional polynomial to test for vanishing on the curve (repeatable)",
    )

    prop1 = subparsers.add_parser(
        "prop1", parents=[common, _oracle_options(with_ext=False)], help="Column reduction test for a monomial matrix"
    )
    prop1.add_argument("--matrix", required=True, help="Matrix text, e.g. 'a^2*d,b,c;b,a,d'")
    prop1.add_argument("--column", type=int, default=None, help="Test only this column (1-based)")
    prop1.add_argument("--oracle", action="store_true", help="Cross-check holding columns over finite fields")

    classify = subparsers.add_parser("classify", parents=[common], help="Match a simple 2x3 matrix to forms i-ix")
    classify.add_argument("--matrix", required=True, help="Matrix text, e.g. 'a,b,c;b,c,a'")

    valla = subparsers.add_parser(
        "valla", parents=[common, _oracle_options(with_ext=False)], help="Explicit (f, g) for (a^m,b^n,c^p; b^r,c^s,a^u)"
    )
    for name in ("m", "n", "p", "r", "s", "u"):
        valla.add_argument(f"--{name}", type=int, required=True)
    valla.add_argument(
        "--check-curve",
        type=int,
        nargs=3,
        metavar=("ALPHA", "BETA", "GAMMA"),
        help="Test vanishing of f and g on (t^ALPHA, t^BETA, t^GAMMA)",
    )

    return parser


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    return build_parser().parse_args(argv)
