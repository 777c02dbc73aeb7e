import pytest

from monomial_stci.algebra.monomials import (
    Binomial,
    Monomial,
    VariableSet,
    ZeroMinor,
    mono_gcd,
    squarefree_part,
    support,
)
from monomial_stci.exceptions import (
    DimensionMismatchError,
    NegativeExponentError,
    StciError,
    VariableSetMismatchError,
)

ABCD = VariableSet.of("abcd")
X = VariableSet.of(["x0", "x1", "x2", "x3"])


def m(*exponents, variables=ABCD):
    return Monomial(variables, exponents)


class TestVariableSet:
    def test_duplicate_names_rejected(self):
        with pytest.raises(StciError):
            VariableSet.of(["a", "a"])

    def test_relabeled_moves_names(self):
        assert VariableSet.of(["x0", "x1", "x2", "x3"]).relabeled((3, 1, 2, 0)).names == ("x3", "x1", "x2", "x0")

    def test_relabeled_needs_permutation(self):
        with pytest.raises(StciError):
            X.relabeled((0, 0, 1, 2))

    def test_unknown_name(self):
        with pytest.raises(StciError, match="unknown variable 'e'"):
            ABCD.index("e")


class TestMonomial:
    def test_rejects_negative_exponent(self):
        with pytest.raises(NegativeExponentError):
            m(1, -1, 0, 0)

    def test_rejects_wrong_length(self):
        with pytest.raises(DimensionMismatchError):
            m(1, 2)

    def test_render(self):
        assert m(2, 0, 0, 1).render() == "a^2*d"
        assert m(0, 0, 0, 0).render() == "1"
        assert Monomial(X, (0, 35, 0, 0)).render() == "x1^35"

    def test_mixed_variable_sets(self):
        with pytest.raises(VariableSetMismatchError):
            m(1, 0, 0, 0) * Monomial(X, (1, 0, 0, 0))

    def test_from_powers(self):
        assert Monomial.from_powers(ABCD, {"d": 1, "a": 2}) == m(2, 0, 0, 1)


class TestGcdSupport:
    def test_gcd_componentwise_min(self):
        assert mono_gcd(m(2, 1, 0, 0), m(1, 3, 0, 0)) == m(1, 1, 0, 0)

    def test_gcd_idempotent(self):
        a = m(3, 0, 2, 1)
        assert mono_gcd(a, a) == a

    def test_gcd_coprime(self):
        assert mono_gcd(m(2, 0, 0, 1), m(0, 1, 0, 0)).is_one

    def test_gcd_divides_both(self):
        a, b = m(4, 1, 0, 2), m(1, 1, 3, 5)
        g = mono_gcd(a, b)
        assert g.divides(a) and g.divides(b)

    def test_support(self):
        assert support(m(2, 0, 0, 1)) == frozenset({0, 3})
        assert support(m(0, 0, 0, 0)) == frozenset()

    def test_squarefree_part(self):
        assert squarefree_part(m(3, 0, 2, 0)) == m(1, 0, 1, 0)
        assert squarefree_part(m(0, 0, 0, 0)).is_one
        assert squarefree_part(Monomial(X, (33, 0, 0, 2))).render() == "x0*x3"

    def test_squarefree_idempotent_and_keeps_support(self):
        a = m(5, 0, 2, 7)
        once = squarefree_part(a)
        assert squarefree_part(once) == once
        assert support(once) == support(a)


class TestBinomial:
    def test_orientation_is_kept(self):
        plus, minus = Monomial(X, (0, 3, 0, 0)), Monomial(X, (2, 0, 1, 0))
        assert Binomial.from_terms(plus, minus).render() == "x1^3 - x0^2*x2"
        assert Binomial.from_terms(minus, plus).render() == "x0^2*x2 - x1^3"

    def test_canonical_pair_shared(self):
        a, b = m(1, 1, 0, 0), m(0, 0, 2, 0)
        first, second = Binomial.from_terms(a, b), Binomial.from_terms(b, a)
        assert (first.lead, first.trail) == (second.lead, second.trail)
        assert first.sign == -second.sign
        assert first.same_up_to_sign(second)

    def test_lead_precedes_trail(self):
        b = Binomial.from_terms(m(1, 0, 0, 0), m(0, 0, 3, 0))
        assert b.lead.sort_key() > b.trail.sort_key()

    def test_equal_terms_rejected(self):
        with pytest.raises(StciError):
            Binomial.from_terms(m(1, 0, 0, 0), m(1, 0, 0, 0))

    def test_homogeneous(self):
        assert Binomial.from_terms(m(2, 0, 0, 0), m(0, 1, 1, 0)).is_homogeneous
        assert not Binomial.from_terms(m(2, 0, 0, 0), m(0, 1, 0, 0)).is_homogeneous

    def test_to_polynomial_matches_value(self):
        b = Binomial.from_terms(m(0, 0, 0, 1), m(1, 0, 0, 0))
        poly = b.to_polynomial()
        assert poly.coefficient((0, 0, 0, 1)) == 1
        assert poly.coefficient((1, 0, 0, 0)) == -1

    def test_zero_minor_renders_zero(self):
        assert ZeroMinor(ABCD).render() == "0"
        assert ZeroMinor(ABCD).to_polynomial().is_zero
