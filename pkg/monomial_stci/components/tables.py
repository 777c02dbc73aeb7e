"""
Text rendering of run reports as polars tables.
"""

from typing import Dict, List, Optional

import polars as pl

from ..data.reports import CheckResult, FormPayload, OracleReport, ReductionPayload, RunReport

# Values are shown as strings so exponent-sized integers never overflow a dtype.
_TABLE_STYLE = dict(
    tbl_formatting="ASCII_MARKDOWN",
    tbl_hide_dataframe_shape=True,
    tbl_hide_column_data_types=True,
    tbl_rows=-1,
    tbl_cols=-1,
)


def _limits_for(frame: pl.DataFrame) -> Dict[str, int]:
    """String and table widths large enough that no cell is cut or wrapped."""
    widths = [max([len(c)] + [len(v) for v in frame[c]]) for c in frame.columns]
    return {"fmt_str_lengths": max(widths) + 2, "tbl_width_chars": sum(widths) + 3 * len(widths) + 8}


def render_table(rows: List[Dict[str, object]], title: Optional[str] = None) -> str:
    """
    Render rows as an ASCII markdown table.

    Args:
        rows: One dict per row; keys of the first row give the column order
        title: Optional heading printed above the table

    Returns:
        The table text, or a "(none)" line when there are no rows
    """
    heading = f"{title}\n" if title else ""
    if not rows:
        return f"{heading}(none)"
    columns = list(rows[0])
    frame = pl.DataFrame({c: [str(row.get(c, "")) for row in rows] for c in columns})
    with pl.Config(**_TABLE_STYLE, **_limits_for(frame)):
        return f"{heading}{frame}"


def params_table(params: Dict[str, int]) -> str:
    return render_table([{"quantity": k, "value": v} for k, v in params.items()], "Curve parameters")


def checks_table(checks: List[CheckResult]) -> str:
    rows = [
        {
            "check": c.name,
            "result": "pass" if c.passed else "FAIL",
            "lhs": c.lhs or "",
            "rhs": c.rhs or "",
            "witnesses": "; ".join(c.witnesses[:5]),
        }
        for c in checks
    ]
    return render_table(rows, "Checks")


def oracle_table(reports: List[OracleReport]) -> str:
    rows = [
        {
            "comparison": r.subject,
            "field": r.comparison.field,
            "status": r.status,
            "K": "" if r.ext_degree is None else r.ext_degree,
            "|left|": r.comparison.left_count,
            "|right|": r.comparison.right_count,
            "unmatched": "; ".join((r.comparison.left_minus_right + r.comparison.right_minus_left)[:5]),
        }
        for r in reports
    ]
    return render_table(rows, "Finite-field oracle")


def reductions_table(reductions: List[ReductionPayload]) -> str:
    rows = [
        {
            "column": r.column,
            "hypothesis": "holds" if r.holds else "fails",
            "J_k": "; ".join(r.generators),
            "uncovered terms": "; ".join(e for e in r.evidence if e.endswith("not covered")),
        }
        for r in reductions
    ]
    return render_table(rows, "Column reduction")


def forms_table(forms: List[FormPayload]) -> str:
    rows = [
        {
            "form": f.form,
            "columns": ",".join(map(str, f.column_order)),
            "rows swapped": "yes" if f.rows_swapped else "no",
            "renaming": " ".join(f"{k}->{v}" for k, v in f.bijection.items()),
            "c/d": "swapped" if f.cd_interchanged else "",
            "exponents": " ".join(f"{k}={v}" for k, v in f.exponents.items()),
            "applicable": "; ".join(
                f"{a['proposition']} ({a['condition']})" for a in f.applicable if a["holds"]
            ),
        }
        for f in forms
        if f.form is not None
    ]
    return render_table(rows, "Form matches")


def render_text_report(report: RunReport) -> str:
    """Human-readable rendering of everything the command produced."""
    sections = [f"{report.command}: {report.status}"]
    if report.params:
        sections.append(params_table(report.params))
    if report.system is not None:
        system = report.system
        lines = [
            f"matrix: {system.matrix.rendered}",
            f"case:   {system.case}",
            f"f  = {system.f.rendered}",
            f"f1 = {system.f1.rendered}",
            f"f2 = {system.f2.rendered}",
            f"M1 = {system.M1.rendered}",
            f"M2 = {system.M2.rendered}",
            f"{system.variant}{' (x0 = 1)' if system.affine else ''}:",
        ]
        lines.extend(f"  {m.rendered}" for m in system.members)
        sections.append("\n".join(lines))
    if report.polynomials:
        sections.append("\n".join(f"{name} = {p.rendered}" for name, p in report.polynomials.items()))
    if report.reductions:
        sections.append(reductions_table(report.reductions))
    if report.forms:
        shortcut = [f for f in report.forms if f.form is None]
        if shortcut:
            sections.append(shortcut[0].reason)
        else:
            sections.append(forms_table(report.forms))
    if report.checks:
        sections.append(checks_table(report.checks))
    if report.oracle:
        sections.append(oracle_table(report.oracle))
    return "\n\n".join(sections)
