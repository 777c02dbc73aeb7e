"""
Command-line entry point.
Routes each subcommand to its page and maps outcomes to exit codes.
"""

import os
import sys
from typing import Callable, Dict, List, Optional

from loguru import logger

from monomial_stci.components.parser import parse_args
from monomial_stci.components.tables import render_text_report
from monomial_stci.config.settings import APP_CONFIG, EXIT_CODES, RENDER_CONFIG, get_env_config
from monomial_stci.data.reports import RunReport
from monomial_stci.exceptions import StciError
from monomial_stci.pages.curve import run_binomials, run_derive, run_verify
from monomial_stci.pages.determinantal import run_classify, run_prop1
from monomial_stci.pages.valla import run_valla
from monomial_stci.utils.helpers import configure_logging

PAGES: Dict[str, Callable[..., RunReport]] = {
    "derive": run_derive,
    "binomials": run_binomials,
    "verify": run_verify,
    "prop1": run_prop1,
    "classify": run_classify,
    "valla": run_valla,
}


def select_log_level(verbose: bool, quiet: bool) -> str:
    """Flags win over STCI_LOG_LEVEL, which wins over the environment profile."""
    if verbose:
        return "DEBUG"
    if quiet:
        return "ERROR"
    return os.getenv("STCI_LOG_LEVEL") or get_env_config()["log_level"]


def emit(report: RunReport, output_format: str) -> None:
    if output_format == "json":
        print(report.model_dump_json(indent=RENDER_CONFIG["json_indent"]))
    else:
        print(render_text_report(report))


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one command.

    Args:
        argv: Arguments without the program name; sys.argv[1:] by default

    Returns:
        Exit code: 0 pass, 1 check failure, 2 input error, 3 oracle inconclusive
    """
    try:
        args = parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage and 0 for --help/--version
        return exc.code if isinstance(exc.code, int) else EXIT_CODES["input_error"]

    configure_logging(select_log_level(args.verbose, args.quiet))
    return handle_errors(args)


def handle_errors(args) -> int:
    """Run the selected page; input errors become exit 2 with a one-line reason."""
    try:
        report = PAGES[args.command](args)
    except StciError as exc:
        print(f"error: {exc}", file=sys.stderr)
        logger.debug("{} rejected input: {!r}", args.command, exc)
        return EXIT_CODES["input_error"]
    except Exception as exc:
        logger.exception("unexpected error in {}", args.command)
        if APP_CONFIG["debug"] or get_env_config()["debug"]:
            raise
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CODES["failure"]

    emit(report, args.format)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
