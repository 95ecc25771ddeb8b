import concurrent.futures
import pickle

import cloudpickle
from pytest import raises
from samuel.core import PolyRing
from samuel.exceptions import NotZeroDimensionalError, RingMismatchError
from samuel.groebner import (
    IdealHandle,
    colength,
    count_standard_monomials,
    elimination,
    ideal_colon,
    ideal_colon_ideal,
    ideal_equal,
    ideal_intersection,
    ideal_power,
    ideal_product,
    ideal_sum,
    is_zero_dimensional,
    krull_dimension,
    membership,
    saturation,
)
from samuel.utils.hash import to_uuid


def test_ideal_handle():
    R = PolyRing(["x", "y"])
    a = IdealHandle(R, ["x^2", "x*y"])
    assert 2 == len(a)
    assert not a.has_groebner_basis
    assert R("x^3") in a
    assert a.has_groebner_basis
    assert R("y^3") not in a
    assert a.is_monomial()
    assert a.is_homogeneous()
    assert not a.is_unit()
    assert not a.is_zero()
    assert IdealHandle.unit(R).is_unit()
    assert IdealHandle.zero(R).is_zero()
    assert IdealHandle(R, ["x", "x + 1"]).is_unit()
    assert "(x^2, x*y)" == repr(a)
    assert a == IdealHandle(R, ["x*y", "x^2", "x^2 + x*y"])
    assert hash(a) == hash(IdealHandle(R, ["x*y", "x^2"]))
    assert to_uuid(a) == to_uuid(IdealHandle(R, ["x*y", "x^2", "x^2 + x*y"]))
    assert a != IdealHandle(R, ["x"])
    assert a != "x"
    raises(RingMismatchError, lambda: a == IdealHandle(PolyRing(["x"]), ["x"]))


def test_sum_product_power():
    R = PolyRing(["x", "y"])
    a = IdealHandle(R, ["x"])
    b = IdealHandle(R, ["y"])
    m = IdealHandle.maximal(R)
    assert m == ideal_sum(a, b)
    assert m == a + b
    assert IdealHandle(R, ["x*y"]) == ideal_product(a, b)
    assert IdealHandle(R, ["x^2", "x*y", "y^2"]) == m * m
    assert IdealHandle(R, ["x^3", "x^2*y", "x*y^2", "y^3"]) == ideal_power(m, 3)
    assert m.power(3) is m ** 3
    assert IdealHandle.unit(R) == m ** 0
    assert m is m ** 1
    raises(ValueError, lambda: m ** -1)
    c = IdealHandle(R, ["x + y", "x - y"])
    assert IdealHandle(R, ["x^2 - y^2", "x^2 + 2*x*y + y^2", "x^2 - 2*x*y + y^2"]) == (
        c ** 2
    )
    # a known basis seeds the sum
    a.groebner_basis()
    s = a.with_generators([R("y^2")])
    assert IdealHandle(R, ["x", "y^2"]) == s


def test_intersection():
    R = PolyRing(["x", "y", "z"])
    assert IdealHandle(R, ["x*y"]) == ideal_intersection(
        IdealHandle(R, ["x"]), IdealHandle(R, ["y"])
    )
    a = IdealHandle(R, ["x - y", "z"])
    b = IdealHandle(R, ["x + y", "z"])
    c = ideal_intersection(a, b)
    assert IdealHandle(R, ["x^2 - y^2", "z"]) == c
    assert R("x^2 - y^2") in c
    assert R("x - y") not in c
    # containment short-circuits
    assert a == ideal_intersection(a, IdealHandle(R, ["x", "y", "z"]))
    assert IdealHandle.zero(R) == ideal_intersection(a, IdealHandle.zero(R))


def test_colon():
    R = PolyRing(["x", "y"])
    a = IdealHandle(R, ["x^2", "x*y"])
    assert IdealHandle(R, ["x", "y"]) == a.colon(R("x"))
    assert IdealHandle(R, ["x"]) == ideal_colon(a, R("y"))
    assert a == a.colon(R("3"))
    raises(ValueError, lambda: a.colon(R.zero()))
    b = IdealHandle(R, ["x^2 - y^2", "x*y - y^2"])
    # (x - y) * (x + y) and (x - y) * y lie in b
    q = b.colon(R("x - y"))
    assert R("x + y") in q and R("y") in q
    assert IdealHandle(R, ["x", "y"]) == q
    assert IdealHandle(R, ["x"]) == ideal_colon_ideal(a, IdealHandle(R, ["x", "y"]))
    assert IdealHandle.unit(R) == ideal_colon_ideal(a, IdealHandle.zero(R))


def test_saturation():
    R = PolyRing(["x", "y"])
    m = IdealHandle.maximal(R)
    a = IdealHandle(R, ["x^2", "x*y"])
    assert IdealHandle(R, ["x"]) == saturation(a, m)
    assert IdealHandle.unit(R) == saturation(m ** 3, m)
    raises(ValueError, lambda: saturation(a, IdealHandle.zero(R)))


def test_elimination():
    R = PolyRing(["t", "x", "y"])
    a = IdealHandle(R, ["x - t^2", "y - t^3"])
    e = elimination(a, 1)
    assert ("x", "y") == e.ring.variables
    assert IdealHandle(e.ring, ["x^3 - y^2"]) == e
    assert a is elimination(a, 0)
    raises(ValueError, lambda: elimination(a, 4))


def test_colength_and_dimension():
    R = PolyRing(["x", "y"])
    a = IdealHandle(R, ["x^2", "y^3"])
    assert 6 == colength(a)
    assert [1, 2, 2, 1] == count_standard_monomials(a)
    assert is_zero_dimensional(a)
    assert 0 == krull_dimension(a)
    assert 0 == colength(IdealHandle.unit(R))
    assert -1 == krull_dimension(IdealHandle.unit(R))
    b = IdealHandle(R, ["x*y"])
    assert not is_zero_dimensional(b)
    assert 1 == krull_dimension(b)
    assert [1, 2, 2, 2] == count_standard_monomials(b, 4)
    raises(NotZeroDimensionalError, lambda: colength(b))
    assert 2 == krull_dimension(IdealHandle.zero(R))
    c = IdealHandle(R, ["x^2 + y^2 - 1", "x - y"])
    assert 2 == colength(c)


def test_pickle_and_threads():
    R = PolyRing(["x", "y", "z"])
    a = IdealHandle(R, ["x^2 - y*z", "x*y - z^2", "y^2 - x*z"])
    gb = a.groebner_basis()
    b = pickle.loads(pickle.dumps(a))
    assert b.has_groebner_basis
    assert gb == b.groebner_basis()
    c = cloudpickle.loads(cloudpickle.dumps(IdealHandle(R, ["x", "y"])))
    assert IdealHandle(R, ["y", "x"]) == c

    fresh = IdealHandle(R, ["x^2 - y*z", "x*y - z^2", "y^2 - x*z"])
    with concurrent.futures.ThreadPoolExecutor(max_workers=4) as executor:
        res = list(executor.map(lambda _: fresh.groebner_basis(), range(8)))
    assert all(gb == r for r in res)


def test_membership_ring_check():
    R = PolyRing(["x", "y"])
    S = PolyRing(["x", "y", "z"])
    raises(ValueError, lambda: membership(S("x"), IdealHandle(R, ["x"])))
    assert ideal_equal(IdealHandle(R, ["x"]), IdealHandle(R, ["2*x"]))
