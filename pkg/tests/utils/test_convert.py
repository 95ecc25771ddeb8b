from pytest import raises
from samuel.utils.convert import as_type, to_bool, to_int_tuple


def test_to_bool():
    assert to_bool(True)
    assert to_bool("yes")
    assert to_bool(" TRUE".strip())
    assert to_bool(1)
    assert not to_bool("false")
    assert not to_bool(0)
    raises(TypeError, lambda: to_bool(None))
    raises(TypeError, lambda: to_bool("x"))


def test_to_int_tuple():
    assert (1, 2, 3) == to_int_tuple("1,2,3")
    assert (1, 2, 3) == to_int_tuple(" 1, 2 ,3,")
    assert (4,) == to_int_tuple(4)
    assert (1, 2) == to_int_tuple([1, "2"])
    assert () == to_int_tuple("")
    raises(TypeError, lambda: to_int_tuple(None))
    raises(TypeError, lambda: to_int_tuple("1,a"))
    raises(TypeError, lambda: to_int_tuple([1.5]))


def test_as_type():
    assert 10 == as_type("10", int)
    assert "10" == as_type(10, str)
    assert as_type("true", bool)
    assert (1, 2, 3) == as_type("1,2,3", tuple)
    assert [1] == as_type([1], list)
    raises(ValueError, lambda: as_type("x", int))
