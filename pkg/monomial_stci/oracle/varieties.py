"""
Zero sets of polynomial systems over finite fields, by enumeration.
"""

from itertools import product
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from loguru import logger

from ..algebra.polynomials import SparsePolynomial, as_polynomial
from ..curves.params import CoordinateRelabeling
from ..data.cache_manager import get_cache_manager
from ..data.reports import EqualityReport
from ..exceptions import DimensionMismatchError, NonHomogeneousError
from ..utils.helpers import log_performance
from .fields import Element, FieldHandle

Point = Tuple[Element, ...]


def evaluate(poly, point: Sequence[Element], field: FieldHandle) -> Element:
    """
    Value of a polynomial at a point; coefficients are read modulo p.

    Raises:
        DimensionMismatchError: point length differs from the variable count
    """
    poly = as_polynomial(poly)
    if len(point) != poly.variables.count:
        raise DimensionMismatchError(
            f"point has {len(point)} coordinates for {poly.variables.count} variables"
        )
    total = field.zero
    for exponents, coeff in poly.terms:
        term = field.from_int(coeff)
        for x, e in zip(point, exponents):
            if e:
                term = field.mul(term, field.pow(x, e))
        total = field.add(total, term)
    return total


def _vanishes_everywhere(polys: Sequence[SparsePolynomial], point: Sequence[Element], field: FieldHandle) -> bool:
    return all(evaluate(f, point, field) == field.zero for f in polys)


def projective_points(field: FieldHandle, dimension: int = 3) -> Iterator[Point]:
    """Canonical representatives of P^dimension(field): first nonzero coordinate 1."""
    elements = list(field.elements())
    size = dimension + 1
    for lead in range(size):
        for tail in product(elements, repeat=size - lead - 1):
            yield (field.zero,) * lead + (field.one,) + tail


def _prepare(polys: Iterable) -> Tuple[SparsePolynomial, ...]:
    return tuple(as_polynomial(f) for f in polys)


@log_performance
def projective_variety(polys: Iterable, field: FieldHandle) -> FrozenSet[Point]:
    """
    All points of P^3(field) where every polynomial vanishes.

    Raises:
        NonHomogeneousError: a polynomial is not homogeneous
        DimensionMismatchError: a polynomial is not in 4 variables
    """
    system = _prepare(polys)
    for f in system:
        if f.variables.count != 4:
            raise DimensionMismatchError(f"projective mode needs 4 variables, got {f.variables.count}")
        if not f.is_homogeneous:
            raise NonHomogeneousError(f"{f} is not homogeneous")

    def compute() -> FrozenSet[Point]:
        return frozenset(pt for pt in projective_points(field) if _vanishes_everywhere(system, pt, field))

    return get_cache_manager().get_or_compute("points", ("projective", system, field.p, field.k), compute)


@log_performance
def affine_variety(
    polys: Iterable, field: FieldHandle, free: Optional[Sequence[int]] = None, variable_count: Optional[int] = None
) -> FrozenSet[Point]:
    """
    All points of field^len(free) where every polynomial vanishes.

    Args:
        polys: Polynomials over one variable set
        field: Field to enumerate
        free: Indices of the coordinates that run over the field; the others are
            fixed to 1. Defaults to every coordinate.
        variable_count: Needed only when polys is empty

    Returns:
        Frozenset of tuples of the free coordinates
    """
    system = _prepare(polys)
    count = system[0].variables.count if system else variable_count
    if count is None:
        raise DimensionMismatchError("cannot infer the number of coordinates of an empty system")
    free = tuple(range(count)) if free is None else tuple(free)

    def compute() -> FrozenSet[Point]:
        found = set()
        point = [field.one] * count
        for values in product(list(field.elements()), repeat=len(free)):
            for index, value in zip(free, values):
                point[index] = value
            if _vanishes_everywhere(system, point, field):
                found.add(tuple(values))
        return frozenset(found)

    return get_cache_manager().get_or_compute("points", ("affine", system, free, count, field.p, field.k), compute)


def format_point(point: Point, field: FieldHandle, projective: bool = True) -> str:
    coords = [field.format(c) for c in point]
    return "(" + (":" if projective else ", ").join(coords) + ")"


def shown_point(
    point: Point, field: FieldHandle, projective: bool = True, relabeling: Optional[CoordinateRelabeling] = None
) -> Point:
    """
    A point in the user's coordinate order.

    Affine points carry x1..x3 only; their relabeling must fix x0. Projective
    points are normalized again after reordering.
    """
    if relabeling is None or relabeling.is_identity:
        return point
    if projective:
        return field.normalize(relabeling.to_user(point))
    return relabeling.to_user((field.one,) + tuple(point))[1:]


def compare_sets(
    left: FrozenSet[Point],
    right: FrozenSet[Point],
    field: FieldHandle,
    left_label: str = "left",
    right_label: str = "right",
    projective: bool = True,
    relabeling: Optional[CoordinateRelabeling] = None,
) -> EqualityReport:
    """Both one-sided differences, witnesses in the user's coordinates and sorted."""

    def witnesses(points: FrozenSet[Point]) -> List[str]:
        shown = sorted(shown_point(pt, field, projective, relabeling) for pt in points)
        return [format_point(pt, field, projective) for pt in shown]

    return EqualityReport(
        field=field.describe(),
        left_label=left_label,
        right_label=right_label,
        left_count=len(left),
        right_count=len(right),
        left_minus_right=witnesses(left - right),
        right_minus_left=witnesses(right - left),
    )


def check_variety_equality(
    left: Sequence,
    right: Sequence,
    field: FieldHandle,
    projective: bool = False,
    free: Optional[Sequence[int]] = None,
    left_label: str = "left",
    right_label: str = "right",
    relabeling: Optional[CoordinateRelabeling] = None,
) -> EqualityReport:
    """Compare V(left) and V(right) over one field; witnesses are shown through `relabeling`."""
    if projective:
        left_points = projective_variety(left, field)
        right_points = projective_variety(right, field)
    else:
        left_points = affine_variety(left, field, free)
        right_points = affine_variety(right, field, free)
    report = compare_sets(left_points, right_points, field, left_label, right_label, projective, relabeling)
    logger.info("{} vs {} over {}: {}", left_label, right_label, field.describe(), report.verdict)
    return report


def nonzero_generators(values: Iterable) -> List[SparsePolynomial]:
    """Drop zero polynomials (zero minors) from a generator list."""
    return [f for f in _prepare(values) if not f.is_zero]
