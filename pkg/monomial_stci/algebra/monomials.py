"""
Monomials and binomials over a named, ordered set of variables.

Exponents are plain Python ints, so they never overflow. Monomials are ordered
degree-lexicographically: total degree first, then the exponent vector compared
from the first variable onward. A Binomial stores its two monomials in that
canonical order and remembers the orientation it was built with in a sign.
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Mapping, Sequence, Tuple, Union

from ..config.settings import RENDER_CONFIG
from ..exceptions import DimensionMismatchError, NegativeExponentError, StciError, VariableSetMismatchError


@dataclass(frozen=True)
class VariableSet:
    """Ordered, pairwise distinct display names of the ring's indeterminates."""

    names: Tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        if not names:
            raise StciError("a variable set needs at least one name")
        if len(set(names)) != len(names):
            raise StciError(f"variable names must be distinct: {', '.join(names)}")
        object.__setattr__(self, "names", names)

    @classmethod
    def of(cls, names: Iterable[str]) -> "VariableSet":
        return cls(tuple(names))

    @property
    def count(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise StciError(f"unknown variable '{name}' (known: {', '.join(self.names)})") from None

    def relabeled(self, permutation: Sequence[int]) -> "VariableSet":
        """Names shown for internal index i become names[permutation[i]]."""
        if sorted(permutation) != list(range(self.count)):
            raise StciError(f"not a permutation of {self.count} indices: {list(permutation)}")
        return VariableSet(tuple(self.names[j] for j in permutation))

    def __str__(self) -> str:
        return ",".join(self.names)


def _check_same(a: VariableSet, b: VariableSet) -> None:
    if a != b:
        raise VariableSetMismatchError(f"variable sets differ: ({a}) vs ({b})")


@dataclass(frozen=True)
class Monomial:
    """Product of nonnegative powers of the variables; the empty product is 1."""

    variables: VariableSet
    exponents: Tuple[int, ...]

    def __post_init__(self):
        exponents = tuple(int(e) for e in self.exponents)
        if len(exponents) != self.variables.count:
            raise DimensionMismatchError(
                f"monomial has {len(exponents)} exponents for {self.variables.count} variables"
            )
        if any(e < 0 for e in exponents):
            raise NegativeExponentError(f"monomial exponents must be nonnegative: {list(exponents)}")
        object.__setattr__(self, "exponents", exponents)

    @classmethod
    def one(cls, variables: VariableSet) -> "Monomial":
        return cls(variables, (0,) * variables.count)

    @classmethod
    def from_powers(cls, variables: VariableSet, powers: Mapping[str, int]) -> "Monomial":
        """Build from {name: exponent}; names not mentioned get exponent 0."""
        exponents = [0] * variables.count
        for name, exp in powers.items():
            exponents[variables.index(name)] += exp
        return cls(variables, tuple(exponents))

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def is_one(self) -> bool:
        return not any(self.exponents)

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return self.degree, self.exponents

    def __mul__(self, other: "Monomial") -> "Monomial":
        _check_same(self.variables, other.variables)
        return Monomial(self.variables, tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __pow__(self, k: int) -> "Monomial":
        return Monomial(self.variables, tuple(e * k for e in self.exponents))

    def divides(self, other: "Monomial") -> bool:
        _check_same(self.variables, other.variables)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def render(self, power: str = None, times: str = None) -> str:
        power = power or RENDER_CONFIG["power_symbol"]
        times = times or RENDER_CONFIG["times_symbol"]
        factors = []
        for name, e in zip(self.variables.names, self.exponents):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}{power}{e}")
        return times.join(factors) if factors else "1"

    def __str__(self) -> str:
        return self.render()


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    """Componentwise minimum of the exponent vectors."""
    _check_same(a.variables, b.variables)
    return Monomial(a.variables, tuple(min(x, y) for x, y in zip(a.exponents, b.exponents)))


def support(m: Monomial) -> FrozenSet[int]:
    """Indices of the variables with positive exponent."""
    return frozenset(i for i, e in enumerate(m.exponents) if e > 0)


def squarefree_part(m: Monomial) -> Monomial:
    """Replace every positive exponent by 1 (generator of the radical of (m))."""
    return Monomial(m.variables, tuple(1 if e > 0 else 0 for e in m.exponents))


@dataclass(frozen=True)
class Binomial:
    """
    Difference of two distinct monomials.

    `lead` is the larger monomial in degree-lex order and `trail` the smaller;
    the value is sign * (lead - trail). Building from (M, N) and from (N, M)
    gives the same (lead, trail) pair with opposite signs.
    """

    lead: Monomial
    trail: Monomial
    sign: int = 1

    def __post_init__(self):
        _check_same(self.lead.variables, self.trail.variables)
        if self.lead == self.trail:
            raise StciError(f"a binomial needs two distinct monomials, got {self.lead} twice")
        if self.lead.sort_key() < self.trail.sort_key():
            raise StciError("binomial lead must precede trail in degree-lex order; use Binomial.from_terms")
        if self.sign not in (1, -1):
            raise StciError(f"binomial sign must be +1 or -1, got {self.sign}")

    @classmethod
    def from_terms(cls, plus: Monomial, minus: Monomial) -> "Binomial":
        """The binomial plus - minus."""
        if plus.sort_key() >= minus.sort_key():
            return cls(plus, minus, 1)
        return cls(minus, plus, -1)

    @property
    def variables(self) -> VariableSet:
        return self.lead.variables

    @property
    def plus(self) -> Monomial:
        """Monomial carrying the + sign in the value."""
        return self.lead if self.sign == 1 else self.trail

    @property
    def minus(self) -> Monomial:
        return self.trail if self.sign == 1 else self.lead

    @property
    def terms(self) -> Tuple[Monomial, Monomial]:
        return self.lead, self.trail

    def same_up_to_sign(self, other: "Binomial") -> bool:
        return (self.lead, self.trail) == (other.lead, other.trail)

    @property
    def is_homogeneous(self) -> bool:
        return self.lead.degree == self.trail.degree

    def to_polynomial(self):
        from .polynomials import SparsePolynomial

        return SparsePolynomial.from_dict(
            self.variables, {self.plus.exponents: 1, self.minus.exponents: -1}
        )

    def render(self, power: str = None, times: str = None) -> str:
        return f"{self.plus.render(power, times)} - {self.minus.render(power, times)}"

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class ZeroMinor:
    """A 2-minor whose two products coincide; not a Binomial."""

    variables: VariableSet

    def to_polynomial(self):
        from .polynomials import SparsePolynomial

        return SparsePolynomial.zero(self.variables)

    def render(self, power: str = None, times: str = None) -> str:
        return "0"

    def __str__(self) -> str:
        return "0"


MinorValue = Union[Binomial, ZeroMinor]
