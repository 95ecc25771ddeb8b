from fractions import Fraction

from pytest import raises
from samuel.core.field import QQ, PrimeField, parse_field


def test_rational_field():
    assert Fraction(-2, 3) == QQ.convert("-2/3")
    assert Fraction(5) == QQ.convert(5)
    assert Fraction(1, 2) == QQ.convert(" 2/4 ")
    raises(TypeError, lambda: QQ.convert(0.5))
    raises(TypeError, lambda: QQ.convert(True))
    assert Fraction(3, 2) == QQ.inv(Fraction(2, 3))
    assert Fraction(1, 3) == QQ.div(Fraction(1), Fraction(3))
    raises(ZeroDivisionError, lambda: QQ.inv(0))
    assert 0 == QQ.characteristic
    assert "-2/3" == QQ.format(Fraction(-2, 3))


def test_prime_field():
    f = PrimeField(32003)
    assert 32002 == f.convert(-1)
    assert "-1" == f.format(32002)
    assert "5" == f.format(5)
    assert 1 == f.norm(f.convert(3) * f.inv(3))
    # 1/2 is the inverse of 2
    assert 1 == f.norm(f.convert("1/2") * 2)
    assert f.convert("1/2") == f.div(1, 2)
    raises(ZeroDivisionError, lambda: f.inv(32003))
    raises(ZeroDivisionError, lambda: f.convert(Fraction(1, 32003)))
    raises(TypeError, lambda: f.convert(1.5))
    assert 32003 == f.characteristic
    raises(ValueError, lambda: PrimeField(32004))
    raises(ValueError, lambda: PrimeField(1))
    # small primes are allowed
    assert 7 == PrimeField(7).p


def test_field_equality():
    assert PrimeField(7) == PrimeField(7)
    assert PrimeField(7) != PrimeField(11)
    assert QQ != PrimeField(7)
    assert hash(PrimeField(7)) == hash(PrimeField(7))
    assert "GF(7)" == repr(PrimeField(7))


def test_parse_field():
    for expr in ["q", "Q", "QQ", " qq "]:
        assert QQ == parse_field(expr)
    for expr in ["fp:7", "Fp 7", "GF(7)", "gf7"]:
        assert PrimeField(7) == parse_field(expr)
    raises(ValueError, lambda: parse_field("R"))
    raises(ValueError, lambda: parse_field("fp:x"))
    raises(ValueError, lambda: parse_field("fp:8"))
