import pytest

from monomial_stci.algebra.monomials import VariableSet
from monomial_stci.algebra.parsing import infer_variables, parse_matrix, parse_monomial, parse_polynomial
from monomial_stci.exceptions import ParseError

X = VariableSet.of(["x0", "x1", "x2", "x3"])


def test_infer_default_matrix_names():
    assert infer_variables(["b", "d"]).names == ("a", "b", "c", "d")


def test_infer_default_curve_names():
    assert infer_variables(["x1", "x0"]).names == ("x0", "x1", "x2", "x3")


def test_infer_other_names_sorted():
    assert infer_variables(["f", "a", "e"]).names == ("a", "e", "f")


def test_parse_monomial_repeated_factor():
    assert parse_monomial("a^2*b*a", VariableSet.of("abcd")).exponents == (3, 1, 0, 0)


def test_parse_unit_monomial():
    assert parse_monomial("1", X).is_one


@pytest.mark.parametrize("text", ["a^", "2a", "a**2", ""])
def test_bad_monomials(text):
    with pytest.raises(ParseError):
        parse_monomial(text, VariableSet.of("abcd"))


def test_unknown_variable_in_matrix():
    with pytest.raises(ParseError):
        parse_matrix("a,b;c,e", VariableSet.of("abcd"))


def test_matrix_text_survives_rendering():
    text = "x1^35,x3^2,x0^18*x2^4;x0^33,1,x1^20"
    assert parse_matrix(text).render() == text


def test_six_variable_matrix():
    A = parse_matrix("a,b,c;d,e,f")
    assert A.variables.count == 6


def test_parse_polynomial_with_coefficients():
    g = parse_polynomial("a^4 - 2*a*b*c + c^3", VariableSet.of("abc"))
    assert g.render() == "a^4 - 2*a*b*c + c^3"
    assert g.coefficient((1, 1, 1)) == -2


def test_parse_polynomial_constant_and_sign():
    f = parse_polynomial("-x1+x0", X)
    assert f.as_dict() == {(1, 0, 0, 0): 1, (0, 1, 0, 0): -1}
    assert parse_polynomial("3", X).coefficient((0, 0, 0, 0)) == 3


def test_parse_polynomial_garbage():
    with pytest.raises(ParseError):
        parse_polynomial("x1 -- x0", X)
