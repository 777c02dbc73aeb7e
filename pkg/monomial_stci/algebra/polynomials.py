"""
Sparse multivariate polynomials with exact integer coefficients.
"""

from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple, Union

from ..config.settings import RENDER_CONFIG
from ..exceptions import DimensionMismatchError, NegativeExponentError, VariableSetMismatchError
from .monomials import Monomial, VariableSet

Exponents = Tuple[int, ...]
Term = Tuple[Exponents, int]


def _term_key(exponents: Exponents) -> Tuple[int, Exponents]:
    return sum(exponents), exponents


@dataclass(frozen=True)
class SparsePolynomial:
    """
    Finite sum of integer multiples of monomials.

    Terms are kept as a tuple sorted in descending degree-lex order, so equal
    polynomials compare and hash equal. Build through `from_dict` or
    `from_terms`; zero coefficients are dropped and repeated exponent vectors
    merged.
    """

    variables: VariableSet
    terms: Tuple[Term, ...] = ()

    @classmethod
    def from_dict(cls, variables: VariableSet, mapping: Mapping[Exponents, int]) -> "SparsePolynomial":
        return cls.from_terms(variables, mapping.items())

    @classmethod
    def from_terms(cls, variables: VariableSet, terms: Iterable[Tuple[Sequence[int], int]]) -> "SparsePolynomial":
        collected: Dict[Exponents, int] = {}
        for exponents, coeff in terms:
            exponents = tuple(int(e) for e in exponents)
            if len(exponents) != variables.count:
                raise DimensionMismatchError(
                    f"term has {len(exponents)} exponents for {variables.count} variables"
                )
            if any(e < 0 for e in exponents):
                raise NegativeExponentError(f"negative exponent in term {list(exponents)}")
            collected[exponents] = collected.get(exponents, 0) + int(coeff)
        ordered = sorted(
            ((e, c) for e, c in collected.items() if c != 0), key=lambda t: _term_key(t[0]), reverse=True
        )
        return cls(variables, tuple(ordered))

    @classmethod
    def zero(cls, variables: VariableSet) -> "SparsePolynomial":
        return cls(variables, ())

    @classmethod
    def constant(cls, variables: VariableSet, value: int) -> "SparsePolynomial":
        return cls.from_terms(variables, [((0,) * variables.count, value)])

    def as_dict(self) -> Dict[Exponents, int]:
        return dict(self.terms)

    def coefficient(self, exponents: Sequence[int]) -> int:
        return self.as_dict().get(tuple(exponents), 0)

    def monomials(self) -> List[Monomial]:
        return [Monomial(self.variables, e) for e, _ in self.terms]

    def __iter__(self) -> Iterator[Term]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def total_degree(self) -> int:
        """Largest term degree; -1 for the zero polynomial."""
        return max((sum(e) for e, _ in self.terms), default=-1)

    @property
    def is_homogeneous(self) -> bool:
        return len({sum(e) for e, _ in self.terms}) <= 1

    def _coerce(self, other: Union["SparsePolynomial", int]) -> "SparsePolynomial":
        if isinstance(other, int):
            return SparsePolynomial.constant(self.variables, other)
        if other.variables != self.variables:
            raise VariableSetMismatchError(f"variable sets differ: ({self.variables}) vs ({other.variables})")
        return other

    def __add__(self, other: Union["SparsePolynomial", int]) -> "SparsePolynomial":
        other = self._coerce(other)
        return SparsePolynomial.from_terms(self.variables, list(self.terms) + list(other.terms))

    __radd__ = __add__

    def __neg__(self) -> "SparsePolynomial":
        return SparsePolynomial(self.variables, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: Union["SparsePolynomial", int]) -> "SparsePolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other: int) -> "SparsePolynomial":
        return (-self) + other

    def __mul__(self, other: Union["SparsePolynomial", int]) -> "SparsePolynomial":
        other = self._coerce(other)
        products = (
            (tuple(a + b for a, b in zip(e1, e2)), c1 * c2) for e1, c1 in self.terms for e2, c2 in other.terms
        )
        return SparsePolynomial.from_terms(self.variables, products)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "SparsePolynomial":
        result = SparsePolynomial.constant(self.variables, 1)
        for _ in range(k):
            result = result * self
        return result

    def map_exponents(self, fn: Callable[[Exponents], Sequence[int]]) -> "SparsePolynomial":
        """Apply `fn` to every exponent vector and merge the resulting like terms."""
        return SparsePolynomial.from_terms(self.variables, ((fn(e), c) for e, c in self.terms))

    def substitute_monomials(self, images: Sequence[Sequence[int]]) -> Dict[Exponents, int]:
        """
        Substitute variable i by the parameter monomial with exponent vector images[i].

        Args:
            images: One exponent vector per variable, all of the same length

        Returns:
            {parameter exponent vector: coefficient} with zero coefficients removed
        """
        if len(images) != self.variables.count:
            raise DimensionMismatchError(
                f"{len(images)} parameter images for {self.variables.count} variables"
            )
        width = len(images[0]) if images else 0
        collected: Dict[Exponents, int] = {}
        for exponents, coeff in self.terms:
            image = tuple(sum(e * img[j] for e, img in zip(exponents, images)) for j in range(width))
            collected[image] = collected.get(image, 0) + coeff
        return {e: c for e, c in collected.items() if c != 0}

    def render(self, power: str = None, times: str = None) -> str:
        if not self.terms:
            return "0"
        times_symbol = times or RENDER_CONFIG["times_symbol"]
        pieces: List[str] = []
        for index, (exponents, coeff) in enumerate(self.terms):
            body = Monomial(self.variables, exponents).render(power, times)
            magnitude = abs(coeff)
            if body == "1":
                body = str(magnitude)
            elif magnitude != 1:
                body = f"{magnitude}{times_symbol}{body}"
            if index == 0:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f"{'-' if coeff < 0 else '+'} {body}")
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def to_pairs(self) -> List[Tuple[List[int], int]]:
        """[(exponent list, coefficient)] in rendering order, for JSON output."""
        return [(list(e), c) for e, c in self.terms]


def as_polynomial(value) -> SparsePolynomial:
    """Accept a SparsePolynomial, Binomial or ZeroMinor and return a SparsePolynomial."""
    if isinstance(value, SparsePolynomial):
        return value
    return value.to_polynomial()
