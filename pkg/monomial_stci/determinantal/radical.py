"""
Column reduction test for ideals of 2-minors of monomial matrices.

Let J be generated by the 2-minors of a 2 x r monomial matrix A and J_k by the
minors involving column k. Then rad(J) = rad(J_k) iff J lies in
rad(a_1k, a_2k). That radical is the monomial ideal generated by the
squarefree parts of the two entries, so a monomial belongs to it iff its
support contains the support of one of the entries, and a binomial belongs iff
both of its terms do.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from loguru import logger

from ..algebra.matrices import MonomialMatrix, all_2minors, minor_2x2
from ..algebra.monomials import MinorValue, Monomial, ZeroMinor, mono_gcd, squarefree_part, support


@dataclass(frozen=True)
class TermEvidence:
    """Whether one term of one minor lies in rad(a_1k, a_2k), and through which row."""

    minor: Tuple[int, int]
    term: Monomial
    covered_by: Optional[int]

    def describe(self) -> str:
        i, j = self.minor
        if self.covered_by is None:
            return f"D{i}{j} term {self.term}: not covered"
        return f"D{i}{j} term {self.term}: covered by row {self.covered_by}"


@dataclass(frozen=True)
class RadicalReduction:
    column: int
    holds: bool
    generators: Tuple[Tuple[int, int, MinorValue], ...]
    evidence: Tuple[TermEvidence, ...]
    radical_generators: Tuple[Monomial, Monomial]

    @property
    def uncovered(self) -> List[TermEvidence]:
        return [e for e in self.evidence if e.covered_by is None]

    def describe_generators(self) -> List[str]:
        return [f"D{i}{j} = {value}" for i, j, value in self.generators]


def is_simple(A: MonomialMatrix) -> bool:
    """No 2-minor is zero or has a nonconstant monomial factor."""
    for _, _, minor in all_2minors(A):
        if isinstance(minor, ZeroMinor):
            return False
        if not mono_gcd(minor.lead, minor.trail).is_one:
            return False
    return True


def in_monomial_radical(term: Monomial, generators: Tuple[Monomial, ...]) -> Optional[int]:
    """1-based index of the first generator whose support the term's support contains."""
    term_support = support(term)
    for index, generator in enumerate(generators, start=1):
        if support(generator) <= term_support:
            return index
    return None


def radical_hypothesis(A: MonomialMatrix, k: int) -> RadicalReduction:
    """
    Decide whether every minor of A lies in rad(a_1k, a_2k).

    Args:
        A: 2 x r monomial matrix
        k: Column, 1-based

    Returns:
        RadicalReduction with the verdict, the minors J_k and per-term evidence
    """
    column = A.column(k)
    evidence = []
    for i, j, minor in all_2minors(A):
        if isinstance(minor, ZeroMinor):
            continue
        for term in minor.terms:
            evidence.append(TermEvidence((i, j), term, in_monomial_radical(term, column)))
    generators = tuple(
        (min(i, k), max(i, k), minor_2x2(A, min(i, k), max(i, k))) for i in range(1, A.cols + 1) if i != k
    )
    holds = all(e.covered_by is not None for e in evidence)
    logger.debug("column {}: hypothesis {}", k, "holds" if holds else "fails")
    return RadicalReduction(
        column=k,
        holds=holds,
        generators=generators,
        evidence=tuple(evidence),
        radical_generators=(squarefree_part(column[0]), squarefree_part(column[1])),
    )


def find_reducing_columns(A: MonomialMatrix) -> List[RadicalReduction]:
    """radical_hypothesis for every column, in column order."""
    return [radical_hypothesis(A, k) for k in range(1, A.cols + 1)]


def column_ideal_witnesses(reduction: RadicalReduction, A: MonomialMatrix) -> List[str]:
    """
    Terms of the J_k minors divisible by neither entry of column k.

    J_k always lies in (a_1k, a_2k), so a nonempty result is a bug.
    """
    column = A.column(reduction.column)
    witnesses = []
    for i, j, minor in reduction.generators:
        if isinstance(minor, ZeroMinor):
            continue
        for term in minor.terms:
            if not any(entry.divides(term) for entry in column):
                witnesses.append(f"D{i}{j} term {term}")
    return witnesses
