"""
Finite fields GF(p) and GF(p^k) for brute-force enumeration.

Prime field elements are ints in 0..p-1. Extension field elements are
coefficient tuples (c0, c1, ..., c_{k-1}) of polynomials in t reduced modulo a
monic irreducible of degree k; the modulus is the first monic irreducible found
when the lower coefficients (c0, ..., c_{k-1}) run through itertools.product
order.
"""

from itertools import product
from typing import Any, Iterator, List, Optional, Sequence, Tuple

from loguru import logger

from ..data.cache_manager import get_cache_manager
from ..exceptions import FieldConstructionError
from ..utils.helpers import format_field, is_prime

Element = Any
Poly = List[int]


def _trim(a: Poly) -> Poly:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a: Sequence[int], modulus: Sequence[int], p: int) -> Poly:
    """Remainder of a modulo a monic polynomial over GF(p); coefficients low to high."""
    rem = _trim([c % p for c in a])
    deg = len(modulus) - 1
    while len(rem) - 1 >= deg:
        lead = rem[-1]
        shift = len(rem) - 1 - deg
        for i, c in enumerate(modulus):
            rem[shift + i] = (rem[shift + i] - lead * c) % p
        _trim(rem)
    return rem


def poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> Poly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    k = len(modulus) - 1
    for d in range(1, k // 2 + 1):
        for lower in product(range(p), repeat=d):
            if not poly_mod(modulus, list(lower) + [1], p):
                return False
    return True


def first_irreducible(p: int, k: int) -> Tuple[int, ...]:
    for lower in product(range(p), repeat=k):
        candidate = list(lower) + [1]
        if lower[0] != 0 and is_irreducible(candidate, p):
            return tuple(candidate)
    raise FieldConstructionError(f"no irreducible polynomial of degree {k} over GF({p})")


class FieldHandle:
    """Common interface of PrimeField and ExtensionField."""

    p: int
    k: int
    modulus: Optional[Tuple[int, ...]]

    @property
    def order(self) -> int:
        return self.p ** self.k

    def describe(self) -> str:
        return format_field(self.p, self.k)

    def pow(self, a: Element, n: int) -> Element:
        """Square-and-multiply; 0^0 = 1."""
        result = self.one
        base = a
        while n > 0:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def inv(self, a: Element) -> Element:
        if a == self.zero:
            raise ZeroDivisionError("zero has no inverse")
        return self.pow(a, self.order - 2)

    def is_in_prime_subfield(self, a: Element) -> bool:
        """Frobenius test a^p == a."""
        return self.pow(a, self.p) == a

    def normalize(self, coords: Sequence[Element]) -> Tuple[Element, ...]:
        """Scale a projective point so its first nonzero coordinate is 1."""
        for c in coords:
            if c != self.zero:
                scale = self.inv(c)
                return tuple(self.mul(scale, x) for x in coords)
        raise ValueError("the zero vector is not a projective point")

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.describe()})"


class PrimeField(FieldHandle):
    def __init__(self, p: int):
        self.p = p
        self.k = 1
        self.modulus = None
        self.zero = 0
        self.one = 1

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def pow(self, a: int, n: int) -> int:
        # builtin three-argument pow is square-and-multiply with pow(0, 0, p) == 1
        return pow(a, n, self.p)

    def from_int(self, n: int) -> int:
        return n % self.p

    def to_int(self, a: int) -> int:
        return a

    def elements(self) -> Iterator[int]:
        return iter(range(self.p))

    def format(self, a: int) -> str:
        return str(a)


class ExtensionField(FieldHandle):
    def __init__(self, p: int, k: int, modulus: Tuple[int, ...]):
        self.p = p
        self.k = k
        self.modulus = tuple(modulus)
        self.zero = (0,) * k
        self.one = (1,) + (0,) * (k - 1)

    def _pack(self, coeffs: Sequence[int]) -> Tuple[int, ...]:
        coeffs = list(coeffs)[: self.k]
        return tuple(coeffs + [0] * (self.k - len(coeffs)))

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x % self.p for x in a)

    def mul(self, a, b):
        return self._pack(poly_mod(poly_mul(a, b, self.p), self.modulus, self.p))

    def from_int(self, n: int):
        return self._pack([n % self.p])

    def to_int(self, a) -> int:
        if any(a[1:]):
            raise ValueError(f"{self.format(a)} is not in the prime subfield")
        return a[0]

    def elements(self) -> Iterator[Tuple[int, ...]]:
        return iter(product(range(self.p), repeat=self.k))

    def format(self, a) -> str:
        terms = []
        for i, c in enumerate(a):
            if c:
                power = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
                terms.append(power if c == 1 and i else f"{c}{'*' if i else ''}{power}")
        return " + ".join(reversed(terms)) or "0"


def _build_field(p: int, k: int) -> FieldHandle:
    if k == 1:
        return PrimeField(p)
    modulus = first_irreducible(p, k)
    logger.debug("GF({}^{}) modulus {}", p, k, modulus)
    return ExtensionField(p, k, modulus)


def build_field(p: int, k: int = 1) -> FieldHandle:
    """
    Build GF(p^k).

    Args:
        p: Prime characteristic
        k: Extension degree, at least 1

    Returns:
        PrimeField for k = 1, otherwise ExtensionField with the first irreducible modulus
    """
    if not is_prime(p):
        raise FieldConstructionError(f"{p} is not prime")
    if k < 1:
        raise FieldConstructionError(f"extension degree must be at least 1, got {k}")
    return get_cache_manager().get_or_compute("fields", (p, k), lambda: _build_field(p, k))
