from fractions import Fraction

from pytest import raises
from samuel.core import LEX, PolyRing, PrimeField
from samuel.exceptions import RingMismatchError
from samuel.utils.hash import to_uuid


def test_ring():
    R = PolyRing(["x", "y", "z"])
    assert ("x", "y", "z") == R.variables
    assert 3 == R.nvars
    assert 1 == R.index("y")
    raises(KeyError, lambda: R.index("w"))
    raises(ValueError, lambda: PolyRing(["x", "x"]))
    raises(AssertionError, lambda: PolyRing(["x", "1y"]))
    assert R == PolyRing(["x", "y", "z"])
    assert R != PolyRing(["x", "y", "z"], order=LEX)
    assert R != PolyRing(["x", "y", "z"], field=PrimeField(7))
    assert R != PolyRing(["x", "y"])
    assert "Q[x,y,z]<degrevlex>" == repr(R)
    assert to_uuid(R) == to_uuid(PolyRing(["x", "y", "z"]))
    assert "t" == R.fresh_name()
    assert "x1" == R.fresh_name("x")


def test_ring_extend():
    R = PolyRing(["x", "y"])
    S = R.extend(["t"])
    assert ("t", "x", "y") == S.variables
    assert "elim(1)" == repr(S.order)
    assert R == S.drop_leading(1)
    p = R("x*y + 1").change_ring(S, [1, 2])
    assert S("x*y + 1") == p


def test_arithmetic():
    R = PolyRing(["x", "y"])
    x, y = R.gens
    p = (x + y) ** 2
    assert "x^2 + 2*x*y + y^2" == str(p)
    assert R("x^2 - y^2") == (x + y) * (x - y)
    assert R.zero() == p - p
    assert 3 == len(p)
    assert 2 == p.degree
    assert -1 == R.zero().degree
    assert p.is_homogeneous()
    assert not (p + 1).is_homogeneous()
    assert R("1 + x") == 1 + x
    assert R("1 - x") == 1 - x
    assert R("2*x") == 2 * x
    assert x ** 0 == 1
    raises(ValueError, lambda: x ** -1)
    assert R(3).is_constant()
    assert R.zero().is_constant()
    assert not x.is_constant()
    assert x.is_monomial()


def test_leading_terms():
    R = PolyRing(["x", "y", "z"])
    p = R("x*z + y^2 - 3")
    assert (0, 2, 0) == p.leading_monomial
    assert Fraction(1) == p.leading_coeff
    assert Fraction(-3) == p.constant_coeff()
    assert Fraction(1) == p.coeff((1, 0, 1))
    assert Fraction(0) == p.coeff((1, 1, 1))
    q = R.with_order(LEX)("x*z + y^2 - 3")
    assert (1, 0, 1) == q.leading_monomial
    raises(ValueError, lambda: R.zero().leading_monomial)
    assert R("x + 1/2") == R("2*x + 1").monic()


def test_evaluate_and_divide():
    R = PolyRing(["x", "y"])
    p = R("x^2*y - 1/2*y")
    assert Fraction(3, 4) == p.evaluate([1, Fraction(3, 2)])
    raises(RingMismatchError, lambda: p.evaluate([1]))
    q, r = R("x^3 - y").divmod_by(R("x - 1"))
    assert R("x^2 + x + 1") == q
    assert R("1 - y") == r
    q, r = R("x^2 - y^2").divmod_by(R("x + y"))
    assert R("x - y") == q
    assert r.is_zero()
    raises(ZeroDivisionError, lambda: p.divmod_by(R.zero()))


def test_prime_field_polynomials():
    R = PolyRing(["x", "y"], field=PrimeField(7))
    assert R("x + 6") == R("x - 1")
    assert "x - 1" == str(R("x + 6"))
    assert R.zero() == R("7*x")
    assert R("x^7 + y^7") == R("(x + y)^7")
    assert R("4*x") == R("x/2")


def test_ring_mismatch():
    R = PolyRing(["x", "y"])
    S = PolyRing(["x", "y"], order=LEX)
    raises(RingMismatchError, lambda: R("x") + S("x"))
    raises(RingMismatchError, lambda: R(S("x")))
    assert R("x") != S("x")
    raises(RingMismatchError, lambda: R.term((1, 0, 0)))


def test_equality_and_hash():
    R = PolyRing(["x", "y"])
    assert R("x*y + 1") == R("1 + y*x")
    assert hash(R("x*y + 1")) == hash(R("1 + y*x"))
    assert R("2") == 2
    assert R("1/2") == Fraction(1, 2)
    assert R("x") == "x"
    assert R("x") != "z"
    assert R("x") != 1.5
    assert to_uuid(R("x*y")) == to_uuid(R("y*x"))
    assert to_uuid(R("x*y")) != to_uuid(R("x*y + 1"))
