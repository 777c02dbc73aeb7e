"""
Classification of simple 2x3 monomial matrices over four variables.

Up to permuting columns, swapping rows and renaming the variables, a simple
2x3 matrix without unit entries has one of nine shapes. Each shape is written
over template variables a, b, c, d with one exponent letter per factor:

    i     a^m  b^n  c^p*d^q   /  b^r      c^s*d^t  a^u
    ii    a^m  b^n  c^p       /  b^r      a^s*c^t  d^u
    iii   a^m  b^n  c^p       /  b^r      c^s      a^t*d^u
    iv    a^m  b^n  c^p*d^q   /  b^r*c^s  d^t      a^u
    v     a^m  b^n  c^p       /  b^r*c^s  a^t      d^u
    vi    a^m  b^n  c^p*d^q   /  c^r      a^s*d^t  b^u
    vii   a^m  b^n  c^p*d^q   /  c^r      d^s      a^t*b^u
    viii  a^m  b^n  c^p       /  c^r      a^s      b^t*d^u
    ix    a^m  b^n  c^p*d^q   /  c^r*d^s  a^u      b^t

The search is exhaustive: 6 column orders x 2 row orders x 24 renamings, with
renamings that differ only by exchanging c and d reported once.
"""

from dataclasses import dataclass, field
from itertools import permutations
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from ..algebra.matrices import MonomialMatrix
from ..algebra.monomials import Monomial, VariableSet, support
from ..exceptions import InvalidMatrixError
from ..utils.helpers import log_performance
from .radical import find_reducing_columns, is_simple

TEMPLATE_VARIABLES = ("a", "b", "c", "d")

Cell = Tuple[Tuple[str, str], ...]

FORM_TEMPLATES: Dict[str, Tuple[Tuple[Cell, Cell, Cell], Tuple[Cell, Cell, Cell]]] = {
    "i": (
        ((("a", "m"),), (("b", "n"),), (("c", "p"), ("d", "q"))),
        ((("b", "r"),), (("c", "s"), ("d", "t")), (("a", "u"),)),
    ),
    "ii": (
        ((("a", "m"),), (("b", "n"),), (("c", "p"),)),
        ((("b", "r"),), (("a", "s"), ("c", "t")), (("d", "u"),)),
    ),
    "iii": (
        ((("a", "m"),), (("b", "n"),), (("c", "p"),)),
        ((("b", "r"),), (("c", "s"),), (("a", "t"), ("d", "u"))),
    ),
    "iv": (
        ((("a", "m"),), (("b", "n"),), (("c", "p"), ("d", "q"))),
        ((("b", "r"), ("c", "s")), (("d", "t"),), (("a", "u"),)),
    ),
    "v": (
        ((("a", "m"),), (("b", "n"),), (("c", "p"),)),
        ((("b", "r"), ("c", "s")), (("a", "t"),), (("d", "u"),)),
    ),
    "vi": (
        ((("a", "m"),), (("b", "n"),), (("c", "p"), ("d", "q"))),
        ((("c", "r"),), (("a", "s"), ("d", "t")), (("b", "u"),)),
    ),
    "vii": (
        ((("a", "m"),), (("b", "n"),), (("c", "p"), ("d", "q"))),
        ((("c", "r"),), (("d", "s"),), (("a", "t"), ("b", "u"))),
    ),
    "viii": (
        ((("a", "m"),), (("b", "n"),), (("c", "p"),)),
        ((("c", "r"),), (("a", "s"),), (("b", "t"), ("d", "u"))),
    ),
    "ix": (
        ((("a", "m"),), (("b", "n"),), (("c", "p"), ("d", "q"))),
        ((("c", "r"), ("d", "s")), (("a", "u"),), (("b", "t"),)),
    ),
}

FORM_ORDER = tuple(FORM_TEMPLATES)


@dataclass(frozen=True)
class Applicability:
    """
    Whether a reduction to two equations applies to a matched form.

    proposition is "robbiano-valla" (binomial plus one more polynomial) or
    "column-radical" (two minors sharing a column); ideals names the monomial
    ideals, in the matrix's own variables, that contain J when it applies.
    """

    proposition: str
    condition: str
    holds: bool
    ideals: Tuple[str, ...] = ()

    def as_dict(self) -> Dict[str, object]:
        return {
            "proposition": self.proposition,
            "condition": self.condition,
            "holds": self.holds,
            "ideals": list(self.ideals),
        }


@dataclass(frozen=True)
class FormMatch:
    """
    One way a matrix fits a form template.

    Templates are listed up to interchanging c and d, so a fit and its c <-> d
    twin are one match. The kept one sends c to the earlier matrix variable;
    cd_interchanged is set when only the twin with c and d exchanged fits.
    """

    form: Optional[str]
    column_order: Tuple[int, ...] = (1, 2, 3)
    rows_swapped: bool = False
    bijection: Dict[str, str] = field(default_factory=dict)
    cd_interchanged: bool = False
    exponents: Dict[str, int] = field(default_factory=dict)
    applicable: Tuple[Applicability, ...] = ()
    reducing_columns: Tuple[int, ...] = ()
    reason: str = ""

    def instantiate(self, variables: VariableSet) -> MonomialMatrix:
        """
        Rebuild the input matrix from the template, the exponents, the renaming,
        the row order and the column order.
        """
        if self.form is None:
            raise InvalidMatrixError("no form to instantiate")
        rows = []
        for row in FORM_TEMPLATES[self.form]:
            cells = []
            for cell in row:
                powers = {self.bijection[var]: self.exponents[letter] for var, letter in cell}
                cells.append(Monomial.from_powers(variables, powers))
            rows.append(tuple(cells))
        arranged = MonomialMatrix(tuple(rows))
        if self.rows_swapped:
            arranged = arranged.swap_rows()
        inverse = [0] * len(self.column_order)
        for position, original in enumerate(self.column_order, start=1):
            inverse[original - 1] = position
        return arranged.permute_columns(inverse)


def _ideal(names: Sequence[str], bijection: Dict[str, str]) -> str:
    return "(" + ", ".join(bijection[n] for n in names) + ")"


def form_applicability(form: str, exponents: Dict[str, int], bijection: Dict[str, str]) -> Tuple[Applicability, ...]:
    e = exponents
    if form == "vii":
        some_zero = min(e["p"], e["q"], e["t"], e["u"]) == 0
        return (
            Applicability("robbiano-valla", "one of p, q, t, u is 0", some_zero),
            Applicability(
                "column-radical",
                "p, q, t, u > 0",
                not some_zero,
                (_ideal("ac", bijection), _ideal("bd", bijection)),
            ),
        )
    result = [Applicability("robbiano-valla", "always", True)]
    if form == "ii":
        result.append(Applicability("column-radical", "s > 0", e["s"] > 0, (_ideal("ab", bijection),)))
    elif form == "iv":
        result.append(
            Applicability(
                "column-radical",
                "r = 0 and p > 0, or q = 0 and s > 0",
                (e["r"] == 0 and e["p"] > 0) or (e["q"] == 0 and e["s"] > 0),
                (_ideal("ac", bijection),),
            )
        )
    elif form == "v":
        result.append(Applicability("column-radical", "r > 0", e["r"] > 0, (_ideal("ab", bijection),)))
    elif form == "vi":
        result.append(
            Applicability(
                "column-radical",
                "s = 0 and q > 0, or p = 0 and t > 0",
                (e["s"] == 0 and e["q"] > 0) or (e["p"] == 0 and e["t"] > 0),
                (_ideal("bd", bijection),),
            )
        )
    return tuple(result)


def _match_template(
    arranged: MonomialMatrix, template, target: Tuple[int, ...]
) -> Optional[Dict[str, int]]:
    """Exponent letters if every entry fits its cell under a -> target[0], ...; else None."""
    exponents: Dict[str, int] = {}
    for row, template_row in zip(arranged.rows, template):
        for entry, cell in zip(row, template_row):
            allowed = {target[TEMPLATE_VARIABLES.index(var)] for var, _ in cell}
            entry_support = support(entry)
            if not entry_support or not entry_support <= allowed:
                return None
            for var, letter in cell:
                exponents[letter] = entry.exponents[target[TEMPLATE_VARIABLES.index(var)]]
    return exponents


def _check_shape(A: MonomialMatrix) -> None:
    if A.cols != 3 or A.variables.count != 4:
        raise InvalidMatrixError(
            f"classification needs a 2x3 matrix over 4 variables, got 2x{A.cols} over {A.variables.count}"
        )


@log_performance
def classify_form(A: MonomialMatrix) -> List[FormMatch]:
    """
    Every (form, column order, row order, renaming) under which A fits a template.

    Args:
        A: Simple 2x3 monomial matrix over 4 variables

    Returns:
        Matches ordered by form (i first). A matrix with an entry equal to 1
        yields one FormMatch with form None describing that shortcut.

    Raises:
        InvalidMatrixError: wrong shape or not simple
    """
    _check_shape(A)
    if not is_simple(A):
        raise InvalidMatrixError(f"matrix {A} is not simple")

    reducing = tuple(r.column for r in find_reducing_columns(A) if r.holds)
    if A.has_unit_entry():
        unit_columns = [k for k in range(1, 4) if any(e.is_one for e in A.column(k))]
        return [
            FormMatch(
                form=None,
                reducing_columns=reducing,
                reason=f"entry equal to 1 in column {', '.join(map(str, unit_columns))}; "
                "the column reduction applies there directly",
            )
        ]

    names = A.variables.names
    found: Dict[str, List[FormMatch]] = {form: [] for form in FORM_ORDER}
    for order in permutations((1, 2, 3)):
        by_columns = A.permute_columns(order)
        for rows_swapped in (False, True):
            arranged = by_columns.swap_rows() if rows_swapped else by_columns
            for target in permutations(range(4)):
                interchanged = target[2] > target[3]
                twin = (target[0], target[1], target[3], target[2])
                for form, template in FORM_TEMPLATES.items():
                    exponents = _match_template(arranged, template, target)
                    if exponents is None:
                        continue
                    if interchanged and _match_template(arranged, template, twin) is not None:
                        continue
                    bijection = {var: names[target[i]] for i, var in enumerate(TEMPLATE_VARIABLES)}
                    found[form].append(
                        FormMatch(
                            form=form,
                            column_order=tuple(order),
                            rows_swapped=rows_swapped,
                            bijection=bijection,
                            cd_interchanged=interchanged,
                            exponents=dict(sorted(exponents.items())),
                            applicable=form_applicability(form, exponents, bijection),
                            reducing_columns=reducing,
                        )
                    )
    matches = [m for form in FORM_ORDER for m in found[form]]
    logger.info("{} form matches: {}", len(matches), sorted({m.form for m in matches}, key=FORM_ORDER.index))
    return matches


def matched_forms(matches: Sequence[FormMatch]) -> List[str]:
    """Distinct form numerals in order."""
    seen = []
    for match in matches:
        if match.form is not None and match.form not in seen:
            seen.append(match.form)
    return seen
