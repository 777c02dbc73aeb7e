import random

import pytest
import sympy

from monomial_stci.algebra.monomials import VariableSet
from monomial_stci.algebra.polynomials import SparsePolynomial
from monomial_stci.exceptions import NegativeExponentError, VariableSetMismatchError
from monomial_stci.oracle.fields import build_field
from monomial_stci.oracle.varieties import evaluate

ABC = VariableSet.of("abc")
SYMBOLS = sympy.symbols("a b c")


def poly(*terms):
    return SparsePolynomial.from_terms(ABC, terms)


def random_poly(rng: random.Random, max_terms: int = 5, max_exp: int = 4) -> SparsePolynomial:
    terms = [
        (tuple(rng.randint(0, max_exp) for _ in range(3)), rng.randint(-6, 6))
        for _ in range(rng.randint(0, max_terms))
    ]
    return SparsePolynomial.from_terms(ABC, terms)


def to_sympy(f: SparsePolynomial):
    return sum(
        (c * sympy.Mul(*(s ** e for s, e in zip(SYMBOLS, exps))) for exps, c in f.terms),
        sympy.Integer(0),
    )


def sympy_terms(expr):
    if expr == 0:
        return {}
    return {tuple(k): int(v) for k, v in sympy.Poly(expr, *SYMBOLS).as_dict().items()}


class TestConstruction:
    def test_like_terms_merge_and_zeros_drop(self):
        f = poly(((1, 0, 0), 2), ((1, 0, 0), -2), ((0, 1, 0), 3))
        assert f.as_dict() == {(0, 1, 0): 3}

    def test_negative_exponent_rejected(self):
        with pytest.raises(NegativeExponentError):
            poly(((1, -1, 0), 1))

    def test_zero(self):
        zero = SparsePolynomial.zero(ABC)
        assert zero.is_zero
        assert zero.render() == "0"
        assert zero.total_degree == -1

    def test_equal_regardless_of_input_order(self):
        first = poly(((4, 0, 0), 1), ((0, 0, 3), 1))
        second = poly(((0, 0, 3), 1), ((4, 0, 0), 1))
        assert first == second
        assert hash(first) == hash(second)


class TestRendering:
    def test_descending_degree_lex(self):
        g = poly(((0, 0, 3), 1), ((1, 1, 1), -2), ((4, 0, 0), 1))
        assert g.render() == "a^4 - 2*a*b*c + c^3"

    def test_leading_minus_and_constant(self):
        assert poly(((0, 1, 0), -1), ((0, 0, 0), 5)).render() == "-b + 5"

    def test_pairs_follow_render_order(self):
        g = poly(((0, 0, 3), 1), ((4, 0, 0), 1))
        assert g.to_pairs() == [([4, 0, 0], 1), ([0, 0, 3], 1)]


class TestArithmetic:
    def test_products_match_sympy(self, rng):
        for _ in range(100):
            f, g = random_poly(rng), random_poly(rng)
            assert (f * g).as_dict() == sympy_terms(sympy.expand(to_sympy(f) * to_sympy(g)))

    def test_sums_match_sympy(self, rng):
        for _ in range(100):
            f, g = random_poly(rng), random_poly(rng)
            assert (f - g).as_dict() == sympy_terms(sympy.expand(to_sympy(f) - to_sympy(g)))

    def test_power(self):
        f = poly(((1, 0, 0), 1), ((0, 1, 0), -1))
        assert (f ** 3).render() == "a^3 - 3*a^2*b + 3*a*b^2 - b^3"

    def test_ring_axioms_by_evaluation(self, rng):
        field = build_field(11)
        for _ in range(40):
            f, g, h = random_poly(rng), random_poly(rng), random_poly(rng)
            point = tuple(rng.randrange(11) for _ in range(3))
            assert evaluate((f * g) * h, point, field) == evaluate(f * (g * h), point, field)
            assert evaluate(f * (g + h), point, field) == evaluate(f * g + f * h, point, field)

    def test_integer_scaling(self):
        f = poly(((1, 0, 0), 1))
        assert (3 * f).coefficient((1, 0, 0)) == 3
        assert (f - 1).render() == "a - 1"

    def test_mismatched_variables(self):
        other = SparsePolynomial.from_terms(VariableSet.of("xyz"), [((1, 0, 0), 1)])
        with pytest.raises(VariableSetMismatchError):
            poly(((1, 0, 0), 1)) + other


class TestQueries:
    def test_homogeneity(self):
        assert poly(((2, 0, 0), 1), ((0, 1, 1), -1)).is_homogeneous
        assert not poly(((2, 0, 0), 1), ((0, 1, 0), -1)).is_homogeneous

    def test_substitute_monomials_cancels(self):
        # a^4 - 2abc + c^3 at (t^3, t^5, t^4)
        g = poly(((4, 0, 0), 1), ((1, 1, 1), -2), ((0, 0, 3), 1))
        assert g.substitute_monomials([(3,), (5,), (4,)]) == {}

    def test_substitute_monomials_survivors(self):
        f = poly(((1, 0, 0), 1), ((0, 1, 0), -1))
        assert f.substitute_monomials([(1, 0), (0, 1), (1, 1)]) == {(1, 0): 1, (0, 1): -1}

    def test_map_exponents_merges(self):
        f = poly(((1, 1, 0), 1), ((0, 1, 0), -1))
        assert f.map_exponents(lambda e: (0,) + tuple(e[1:])).is_zero
