"""
2 x r matrices with monomial entries and their 2-minors.

Column indices in the public functions are 1-based, as the minors are
written: minor_2x2(A, 1, 3) is the minor of the first and third column.
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..exceptions import DimensionMismatchError, InvalidMatrixError, VariableSetMismatchError
from .monomials import Binomial, MinorValue, Monomial, VariableSet, ZeroMinor


@dataclass(frozen=True)
class MonomialMatrix:
    """Two rows of equally many monomials over one VariableSet."""

    rows: Tuple[Tuple[Monomial, ...], Tuple[Monomial, ...]]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        if len(rows) != 2:
            raise InvalidMatrixError(f"a monomial matrix has exactly 2 rows, got {len(rows)}")
        if len(rows[0]) != len(rows[1]):
            raise InvalidMatrixError(f"rows have different lengths: {len(rows[0])} and {len(rows[1])}")
        if len(rows[0]) < 2:
            raise InvalidMatrixError(f"a monomial matrix needs at least 2 columns, got {len(rows[0])}")
        variables = rows[0][0].variables
        for entry in rows[0] + rows[1]:
            if entry.variables != variables:
                raise VariableSetMismatchError("all matrix entries must share one variable set")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_exponents(cls, variables: VariableSet, rows: Sequence[Sequence[Sequence[int]]]) -> "MonomialMatrix":
        return cls(tuple(tuple(Monomial(variables, e) for e in row) for row in rows))

    @property
    def variables(self) -> VariableSet:
        return self.rows[0][0].variables

    @property
    def cols(self) -> int:
        return len(self.rows[0])

    def _check_column(self, k: int) -> None:
        if not 1 <= k <= self.cols:
            raise DimensionMismatchError(f"column {k} out of range 1..{self.cols}")

    def entry(self, row: int, col: int) -> Monomial:
        """Entry in row 1 or 2 and column 1..r."""
        self._check_column(col)
        if row not in (1, 2):
            raise DimensionMismatchError(f"row {row} out of range 1..2")
        return self.rows[row - 1][col - 1]

    def column(self, k: int) -> Tuple[Monomial, Monomial]:
        self._check_column(k)
        return self.rows[0][k - 1], self.rows[1][k - 1]

    def entries(self) -> List[Monomial]:
        return list(self.rows[0] + self.rows[1])

    def has_unit_entry(self) -> bool:
        return any(e.is_one for e in self.entries())

    def permute_columns(self, order: Sequence[int]) -> "MonomialMatrix":
        """New matrix whose column j is column order[j] of this one (1-based)."""
        if sorted(order) != list(range(1, self.cols + 1)):
            raise DimensionMismatchError(f"not a column permutation: {list(order)}")
        return MonomialMatrix(tuple(tuple(row[k - 1] for k in order) for row in self.rows))

    def swap_rows(self) -> "MonomialMatrix":
        return MonomialMatrix((self.rows[1], self.rows[0]))

    def render(self, power: str = None, times: str = None) -> str:
        """Matrix text format: entries separated by ',', rows by ';'."""
        return ";".join(",".join(e.render(power, times) for e in row) for row in self.rows)

    def __str__(self) -> str:
        return self.render()


def minor_2x2(A: MonomialMatrix, i: int, j: int) -> MinorValue:
    """
    The minor a_{1i} a_{2j} - a_{1j} a_{2i}.

    Returns:
        A Binomial in that orientation, or ZeroMinor when both products coincide
    """
    A._check_column(i)
    A._check_column(j)
    if i == j:
        raise DimensionMismatchError(f"a 2-minor needs two distinct columns, got {i} twice")
    plus = A.entry(1, i) * A.entry(2, j)
    minus = A.entry(1, j) * A.entry(2, i)
    if plus == minus:
        return ZeroMinor(A.variables)
    return Binomial.from_terms(plus, minus)


def all_2minors(A: MonomialMatrix) -> List[Tuple[int, int, MinorValue]]:
    """Every minor (i, j, value) with i < j, in column order."""
    return [(i, j, minor_2x2(A, i, j)) for i in range(1, A.cols + 1) for j in range(i + 1, A.cols + 1)]
