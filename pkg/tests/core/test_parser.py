from fractions import Fraction

from pytest import raises
from samuel.core import PolyRing, PrimeField, parse_polynomial
from samuel.core.parser import tokenize
from samuel.exceptions import ParseError


def test_tokenize():
    assert [
        ("name", "x", 0),
        ("op", "*", 1),
        ("name", "y", 2),
        ("op", "^", 3),
        ("num", "3", 4),
    ] == tokenize("x*y^3")
    assert [("num", "2", 1), ("op", "**", 3)] == tokenize(" 2 **")
    assert [] == tokenize("   ")
    with raises(ParseError) as e:
        tokenize("x + $y")
    assert 4 == e.value.column


def test_parse_polynomial():
    R = PolyRing(["x", "y", "z"])
    assert "x*y^3 - 2/3*z" == str(parse_polynomial(R, "x*y^3 - 2/3*z"))
    assert R("x^2 + 2*x*y + y^2") == parse_polynomial(R, "(x+y)**2")
    assert R("-x^2") == parse_polynomial(R, "-x^2")
    assert R("x") == parse_polynomial(R, "+x")
    assert R("x - y") == parse_polynomial(R, "x - (y)")
    assert R("x/2") == parse_polynomial(R, "1/2*x")
    assert Fraction(1, 6) == parse_polynomial(R, "1/2/3").constant_coeff()
    assert R.zero() == parse_polynomial(R, "x - x")
    assert R.one() == parse_polynomial(R, "x^0")


def test_canonical_text_parses_back():
    R = PolyRing(["x", "y", "z"])
    for text in ["x*y^3 - 2/3*z", "(x - y)^3 + 7", "-1/5*x*y*z + z^4", "0"]:
        p = R(text)
        assert p == R(str(p))
    F = PolyRing(["x", "y"], field=PrimeField(11))
    p = F("(x - 2*y)^4")
    assert p == F(str(p))


def test_parse_errors():
    R = PolyRing(["x", "y"])
    _assert_error(R, "", None)
    _assert_error(R, "x + w", 4)
    _assert_error(R, "x * (y", 6)
    _assert_error(R, "x / y", 2)
    _assert_error(R, "x / (1 - 1)", 2)
    _assert_error(R, "x^y", 2)
    _assert_error(R, "x^", 2)
    _assert_error(R, "x y", 2)
    _assert_error(R, "x + )", 4)
    raises(ParseError, lambda: R("x + 1.5"))
    # parse errors are value errors
    raises(ValueError, lambda: R("x +"))


def _assert_error(ring, text, column):
    with raises(ParseError) as e:
        parse_polynomial(ring, text)
    assert column == e.value.column
