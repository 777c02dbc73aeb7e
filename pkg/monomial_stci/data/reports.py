"""
Structured results of checks, oracle comparisons and CLI runs.

Every model serializes to JSON with pydantic; a RunReport read back with
RunReport.model_validate_json dumps to the same bytes.
"""

from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, computed_field

OracleStatus = Literal["equal", "inconclusive", "failed"]


class PolynomialPayload(BaseModel):
    """A polynomial both rendered and as (exponent vector, coefficient) pairs."""

    rendered: str
    terms: List[Tuple[List[int], int]]

    @classmethod
    def from_value(cls, value) -> "PolynomialPayload":
        """Accepts SparsePolynomial, Binomial or ZeroMinor."""
        from ..algebra.polynomials import as_polynomial

        poly = as_polynomial(value)
        return cls(rendered=value.render(), terms=poly.to_pairs())


class MatrixPayload(BaseModel):
    rendered: str
    rows: List[List[str]]
    exponents: List[List[List[int]]]

    @classmethod
    def from_matrix(cls, matrix) -> "MatrixPayload":
        return cls(
            rendered=matrix.render(),
            rows=[[e.render() for e in row] for row in matrix.rows],
            exponents=[[list(e.exponents) for e in row] for row in matrix.rows],
        )


class CheckResult(BaseModel):
    """One named check; lhs/rhs are filled for identities, witnesses for failures."""

    name: str
    passed: bool
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    detail: str = ""
    witnesses: List[str] = Field(default_factory=list)


class VerificationReport(BaseModel):
    subject: str
    passed: bool
    checks: List[CheckResult] = Field(default_factory=list)

    @classmethod
    def from_checks(cls, subject: str, checks: List[CheckResult]) -> "VerificationReport":
        return cls(subject=subject, passed=all(c.passed for c in checks), checks=checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]


class EqualityReport(BaseModel):
    """Comparison of two finite point sets; equal iff both witness lists are empty."""

    field: str
    left_label: str = "left"
    right_label: str = "right"
    left_count: int
    right_count: int
    left_minus_right: List[str] = Field(default_factory=list)
    right_minus_left: List[str] = Field(default_factory=list)

    @computed_field
    @property
    def equal(self) -> bool:
        return not self.left_minus_right and not self.right_minus_left

    @computed_field
    @property
    def verdict(self) -> str:
        if self.equal:
            return "equal"
        if self.left_minus_right and self.right_minus_left:
            return "both-differ"
        return "left-minus-right" if self.left_minus_right else "right-minus-left"


class OracleReport(BaseModel):
    """Outcome of one finite-field comparison, possibly after raising the extension degree."""

    subject: str
    prime: int
    status: OracleStatus
    ext_degree: Optional[int] = None
    comparison: EqualityReport


class SystemPayload(BaseModel):
    f: PolynomialPayload
    f1: PolynomialPayload
    f2: PolynomialPayload
    matrix: MatrixPayload
    case: str
    M1: PolynomialPayload
    M2: PolynomialPayload
    variant: str
    affine: bool
    members: List[PolynomialPayload]


class ReductionPayload(BaseModel):
    column: int
    holds: bool
    generators: List[str]
    evidence: List[str]


class FormPayload(BaseModel):
    form: Optional[str]
    column_order: List[int]
    rows_swapped: bool
    bijection: Dict[str, str]
    cd_interchanged: bool
    exponents: Dict[str, int]
    applicable: List[Dict[str, Any]]
    reason: str = ""


class RunReport(BaseModel):
    """Everything one CLI command computed, in a stable key order."""

    command: str
    input: Dict[str, Any]
    params: Optional[Dict[str, int]] = None
    system: Optional[SystemPayload] = None
    checks: List[CheckResult] = Field(default_factory=list)
    oracle: List[OracleReport] = Field(default_factory=list)
    reductions: List[ReductionPayload] = Field(default_factory=list)
    forms: List[FormPayload] = Field(default_factory=list)
    polynomials: Dict[str, PolynomialPayload] = Field(default_factory=dict)
    status: str = "pass"
    exit_code: int = 0
