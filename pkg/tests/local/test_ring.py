from fractions import Fraction

from pytest import raises
from samuel.core import LEX, PolyRing
from samuel.exceptions import RingMismatchError
from samuel.local import PresentedLocalRing, QuotientIdeal
from samuel.utils.hash import to_uuid


def test_presented_ring():
    S = PolyRing(["u", "x"])
    R = PresentedLocalRing(S, ["u^2", "u*x"], name="embedded_point")
    assert "embedded_point" == R.name
    assert ["u", "x"] == R.variables
    assert 1 == R.dim
    assert not R.is_regular()
    assert PresentedLocalRing(S).is_regular()
    assert 2 == PresentedLocalRing(S).dim
    assert "Q[u,x]/(u^2, u*x)" == repr(R)
    assert R == PresentedLocalRing(S, ["u*x", "u^2", "u^2 + u*x"])
    assert to_uuid(R) == to_uuid(PresentedLocalRing(S, ["u*x", "u^2"]))
    assert R != PresentedLocalRing(S, ["u^2"])
    raises(ValueError, lambda: PresentedLocalRing(S, ["x - 1"]))
    raises(ValueError, lambda: PresentedLocalRing(S.with_order(LEX)))


def test_two_planes_dimension():
    S = PolyRing(["x", "y", "u", "v"])
    R = PresentedLocalRing(S, ["x*u", "x*v", "y*u", "y*v"])
    assert 2 == R.dim
    assert 0 == R.quotient(["x - u", "y - v"]).dim


def test_ring_elements():
    R = PresentedLocalRing(PolyRing(["x", "y"]), ["x*y"])
    x, y = R.gens
    assert (x * y).is_zero()
    assert x * y == R.element(0)
    assert R.element("x^2*y + x") == x
    assert (1 + x).is_unit()
    assert not (x + y).is_unit()
    assert Fraction(3) == R.element("3 + x").value_at_origin()
    assert R.element("x^2 + y^2") == (x + y) ** 2
    assert R.element("x - y") == x - y
    assert R.element("1 - y") == 1 - y
    assert R.element("-x") == -x
    assert R.element("2*x") == 2 * x
    assert x ** 0 == R.element(1)
    raises(ValueError, lambda: x ** -1)
    assert x != R.ring("x")
    assert hash(x) == hash(R.element("x + x*y"))
    assert "x" == str(x)
    other = PresentedLocalRing(PolyRing(["x", "y"]), ["x^2"])
    raises(RingMismatchError, lambda: other.element(x))


def test_quotient_ideals():
    S = PolyRing(["u", "x"])
    R = PresentedLocalRing(S, ["u^2", "u*x"])
    zero = R.zero_ideal()
    assert R.ideal(["u"]) == zero.colon(R.element("x"))
    assert R.ideal(["u", "x"]) == zero.colon(R.element("u"))
    assert R.unit_ideal() == zero.colon(R.element("u^2"))
    assert R.ideal([]) == zero
    assert R.element("u*x") in zero
    assert R.unit_ideal().is_unit()
    m = R.maximal_ideal()
    assert R.ideal(["x^2", "u*x"]) == m ** 2
    assert m ** 2 is m.power(2)
    assert m.power(1) is m
    assert R.unit_ideal() == m ** 0
    raises(ValueError, lambda: m ** -1)
    assert R.ideal(["x^2"]) == m ** 2
    q = R.ideal(["x"])
    assert q.is_subset(m)
    assert not m.is_subset(q)
    assert R.ideal(["u", "x"]) == q + R.ideal(["u"])
    assert R.ideal(["u*x"]) == zero
    assert R.ideal(["x^3"]) == q ** 3
    assert q == q.intersection(m)
    assert R.ideal(["u"]) == zero.saturation(m)
    assert R.ideal(["u"]) == zero.colon_ideal(m)
    assert R.unit_ideal() == q.saturation(R.ideal([]))
    assert "(x)" == repr(q)
    assert to_uuid(q) == to_uuid(R.ideal(["x", "u*x"]))


def test_from_lift_and_mismatch():
    S = PolyRing(["x", "y"])
    R = PresentedLocalRing(S, ["x*y"])
    lift = R.defining_ideal.with_generators([S("x")])
    a = QuotientIdeal.from_lift(R, lift)
    assert R.ideal(["x"]) == a
    assert [R.element("x")] == a.generators
    T = PresentedLocalRing(S, ["x^2"])
    raises(RingMismatchError, lambda: a == T.ideal(["x"]))
    assert a != "x"
