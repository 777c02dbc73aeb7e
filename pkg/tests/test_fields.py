from itertools import product

import pytest
from sympy import Poly, symbols

from monomial_stci.exceptions import FieldConstructionError
from monomial_stci.oracle.fields import ExtensionField, PrimeField, build_field, first_irreducible, is_irreducible

t = symbols("t")


def sympy_irreducible(low_to_high, p):
    return Poly(list(reversed(low_to_high)), t, modulus=p).is_irreducible


@pytest.mark.parametrize("p, k", [(2, 2), (2, 3), (2, 5), (3, 2), (3, 3), (5, 2), (5, 3), (7, 2), (11, 2)])
def test_modulus_is_irreducible(p, k):
    modulus = first_irreducible(p, k)
    assert len(modulus) == k + 1 and modulus[-1] == 1
    assert sympy_irreducible(modulus, p)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_irreducibility_matches_sympy(p):
    for lower in product(range(p), repeat=3):
        candidate = list(lower) + [1]
        assert is_irreducible(candidate, p) == sympy_irreducible(candidate, p), (candidate, p)


def test_prime_field():
    field = build_field(7)
    assert isinstance(field, PrimeField)
    assert field.describe() == "GF(7)"
    assert field.inv(3) == 5
    assert field.pow(0, 0) == 1


@pytest.mark.parametrize("p, k", [(2, 3), (3, 2), (5, 2)])
def test_extension_inverses(p, k):
    field = build_field(p, k)
    assert isinstance(field, ExtensionField)
    assert field.order == p ** k
    for a in field.elements():
        if a != field.zero:
            assert field.mul(a, field.inv(a)) == field.one


@pytest.mark.parametrize("p, k", [(3, 2), (2, 4), (5, 3)])
def test_prime_subfield(p, k):
    field = build_field(p, k)
    inside = [a for a in field.elements() if field.is_in_prime_subfield(a)]
    assert sorted(inside) == sorted(field.from_int(n) for n in range(p))
    assert [field.to_int(a) for a in sorted(inside)] == list(range(p))


def test_to_int_rejects_proper_extension_elements():
    field = build_field(3, 2)
    with pytest.raises(ValueError):
        field.to_int((0, 1))


def test_normalize():
    field = build_field(5)
    assert field.normalize((0, 2, 4, 1)) == (0, 1, 2, 3)
    with pytest.raises(ValueError):
        field.normalize((0, 0, 0, 0))


def test_format():
    field = build_field(3, 2)
    assert field.format((0, 0)) == "0"
    assert field.format((2, 1)) == "t + 2"
    assert field.format((1, 2)) == "2*t + 1"


@pytest.mark.parametrize("p, k", [(4, 1), (1, 1), (5, 0)])
def test_invalid_fields(p, k):
    with pytest.raises(FieldConstructionError):
        build_field(p, k)


def test_fields_are_cached():
    assert build_field(5, 2) is build_field(5, 2)


@pytest.mark.parametrize("p, k", [(5, 1), (3, 2)])
def test_additive_inverses(p, k):
    field = build_field(p, k)
    for a in field.elements():
        assert field.add(a, field.neg(a)) == field.zero
        assert field.sub(a, a) == field.zero
        assert field.sub(field.zero, a) == field.neg(a)


@pytest.mark.parametrize("p, k", [(2, 3), (3, 2), (5, 2), (13, 2)])
def test_field_axioms(p, k, rng):
    field = build_field(p, k)
    elements = list(field.elements())
    for _ in range(300):
        a, b, c = rng.choice(elements), rng.choice(elements), rng.choice(elements)
        assert field.add(field.add(a, b), c) == field.add(a, field.add(b, c))
        assert field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c))
        assert field.mul(a, field.add(b, c)) == field.add(field.mul(a, b), field.mul(a, c))
        assert field.mul(a, b) == field.mul(b, a)
        assert field.pow(a, p ** k) == a
