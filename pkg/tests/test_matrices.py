import pytest

from monomial_stci.algebra.matrices import MonomialMatrix, all_2minors, minor_2x2
from monomial_stci.algebra.monomials import ZeroMinor
from monomial_stci.algebra.parsing import parse_matrix
from monomial_stci.exceptions import DimensionMismatchError, ParseError


@pytest.fixture
def quartic_matrix():
    return parse_matrix("x1^3,x0*x3,x2;x0^2,x1,1")


class TestMinors:
    def test_quartic_minors(self, quartic_matrix):
        assert minor_2x2(quartic_matrix, 1, 3).render() == "x1^3 - x0^2*x2"
        assert minor_2x2(quartic_matrix, 2, 3).render() == "x0*x3 - x1*x2"
        assert minor_2x2(quartic_matrix, 1, 2).render() == "x1^4 - x0^3*x3"

    def test_swapped_columns_flip_sign(self, quartic_matrix):
        forward, backward = minor_2x2(quartic_matrix, 1, 3), minor_2x2(quartic_matrix, 3, 1)
        assert forward.same_up_to_sign(backward)
        assert forward.sign == -backward.sign

    def test_equal_columns_give_zero(self):
        A = parse_matrix("a,a,c;b,b,d")
        assert isinstance(minor_2x2(A, 1, 2), ZeroMinor)

    def test_same_column_rejected(self, quartic_matrix):
        with pytest.raises(DimensionMismatchError):
            minor_2x2(quartic_matrix, 2, 2)

    def test_column_out_of_range(self, quartic_matrix):
        with pytest.raises(DimensionMismatchError):
            minor_2x2(quartic_matrix, 1, 4)

    def test_all_minors_in_column_order(self):
        A = parse_matrix("a*d,b,c;b,a,d")
        assert [(i, j, v.render()) for i, j, v in all_2minors(A)] == [
            (1, 2, "a^2*d - b^2"),
            (1, 3, "a*d^2 - b*c"),
            (2, 3, "b*d - a*c"),
        ]

    def test_all_minors_of_unit_exponent_family(self):
        A = parse_matrix("a,b,c;b*c,d,a")
        assert [v.render() for _, _, v in all_2minors(A)] == ["a*d - b^2*c", "a^2 - b*c^2", "a*b - c*d"]

    def test_two_columns_single_minor(self):
        assert len(all_2minors(parse_matrix("a,b;c,d"))) == 1


class TestShape:
    def test_rows_must_match(self):
        with pytest.raises(ParseError):
            parse_matrix("a,b,c;d,a")

    def test_needs_two_rows(self):
        with pytest.raises(ParseError):
            parse_matrix("a,b,c")

    def test_entry_and_column(self, quartic_matrix):
        assert quartic_matrix.entry(2, 3).is_one
        assert [e.render() for e in quartic_matrix.column(2)] == ["x0*x3", "x1"]
        assert quartic_matrix.has_unit_entry()

    def test_permute_columns_and_swap_rows(self):
        A = parse_matrix("a,b,c;b,c,a")
        assert A.permute_columns((3, 1, 2)).render() == "c,a,b;a,b,c"
        assert A.swap_rows().render() == "b,c,a;a,b,c"

    def test_from_exponents(self, abcd):
        A = MonomialMatrix.from_exponents(abcd, [[(2, 0, 0, 0), (0, 1, 0, 0)], [(0, 0, 1, 0), (0, 0, 0, 1)]])
        assert A.render() == "a^2,b;c,d"
