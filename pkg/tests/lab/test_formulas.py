from pytest import raises
from samuel.core import PolyRing
from samuel.exceptions import HypothesisNotCertifiedError
from samuel.lab.formulas import (
    colon_formula_hypotheses,
    colon_formula_value,
    ed_colon_formula,
    idealization_coeffs,
    idealization_cross_check,
    idealization_table,
    lower_bound_surrogate,
    superficial_sequence_status,
)
from samuel.lab.report import Verdict
from samuel.local import PresentedLocalRing


def test_idealization_coeffs():
    assert [1, 0, 1, 0, 0] == idealization_coeffs(4, 2, [1, 0, 0, 0, 0], [1, 0, 0])
    assert [1, 0, 0, -1, 0, 0] == idealization_coeffs(
        5, 2, [1, 0, 0, 0, 0, 0], [1, 0, 0]
    )
    assert [1, 0, 0, -1, 0] == idealization_coeffs(4, 1, [1, 0, 0, 0, 0], [1, 0])
    assert [2, -3, 0] == idealization_coeffs(2, 1, [2, 0, 0], [3, 0])
    with raises(ValueError):
        idealization_coeffs(3, 0, [1], [1])
    with raises(ValueError):
        idealization_coeffs(3, 3, [1], [1, 0, 0, 0])
    with raises(ValueError):
        idealization_coeffs(4, 2, [1], [1, 0])
    with raises(ValueError):
        idealization_coeffs(4, 2, [], [1, 0, 0])


def test_idealization_table():
    R = _ring(["x", "y", "z"])
    table_r, table_d, table_a = idealization_table(R, ["x"], ["x", "y", "z"], 6)
    assert [0, 1, 4, 10, 20, 35, 56] == list(table_r.values)
    assert [0, 1, 3, 6, 10, 15, 21] == list(table_d.values)
    assert [0, 2, 7, 16, 30, 50, 77] == list(table_a.values)
    assert 2 == table_d.ring.dim


def test_idealization_cross_check():
    R = _ring(["x", "y", "z"])
    report = idealization_cross_check(R, ["x", "y"], ["x", "y", "z"], 8)
    claim = report["idealization"]
    assert Verdict.VERIFIED == claim.verdict
    assert 1 == claim.values["t"]
    assert [1, 0, 1, 0] == claim.values["e_formula"]
    assert claim.values["e_fit"] == claim.values["e_formula"]
    with raises(ValueError):
        idealization_cross_check(_ring(["x", "y"], ["x*y"]), ["x"], ["x", "y"], 6)


def test_idealization_families():
    # d = 4, t = 2: e_2 != 0
    names = ["x1", "x2", "x3", "x4"]
    R = _ring(names)
    claim = idealization_cross_check(R, ["x1", "x2"], names, 10)["idealization"]
    assert Verdict.VERIFIED == claim.verdict
    assert 2 == claim.values["t"]
    assert [1, 0, 1, 0, 0] == claim.values["e_fit"]
    assert 0 == lower_bound_surrogate(R, names)

    # d = 5, t = 2: e_2 = 0 but e_3 = -1
    names = ["x1", "x2", "x3", "x4", "x5"]
    R = _ring(names)
    claim = idealization_cross_check(R, ["x1", "x2", "x3"], names, 12)[
        "idealization"
    ]
    assert Verdict.VERIFIED == claim.verdict
    assert [1, 0, 0, -1, 0, 0] == claim.values["e_fit"]
    assert [1, 0, 0, -1, 0, 0] == claim.values["e_formula"]
    assert 0 == lower_bound_surrogate(R, names)


def test_lower_bound_surrogate():
    two_planes = _ring(["x", "y", "u", "v"], ["x*u", "x*v", "y*u", "y*v"])
    assert -1 == lower_bound_surrogate(two_planes, ["x - u", "y - v"])
    embedded = _ring(["u", "x"], ["u^2", "u*x"])
    assert -1 == lower_bound_surrogate(embedded, ["x"])
    cubic = _ring(["x", "y"], ["y^3"])
    assert 0 == lower_bound_surrogate(cubic, ["x"])
    assert 0 == lower_bound_surrogate(_ring(["x", "y", "z"]), ["x", "y", "z"])


def test_colon_formula():
    R = _ring(["x", "y"])
    m = R.maximal_ideal()
    assert 0 == colon_formula_value(R, m, ["x", "y"])
    assert [] == colon_formula_hypotheses(R, m, ["x", "y"])
    assert 0 == ed_colon_formula(R, m, ["x", "y"], strict=True)

    two_planes = _ring(["x", "y", "u", "v"], ["x*u", "x*v", "y*u", "y*v"])
    q = two_planes.ideal(["x - u", "y - v"])
    assert 0 == colon_formula_value(two_planes, q, ["x - u", "y - v"])

    # (x^2, y) is not a reduction of m
    assert "reduction" in colon_formula_hypotheses(R, m, ["x^2", "y"])
    with raises(HypothesisNotCertifiedError):
        ed_colon_formula(R, m, ["x^2", "y"], strict=True)
    ed_colon_formula(R, m, ["x^2", "y"])

    cubic = _ring(["x", "y"], ["y^3"])
    with raises(ValueError):
        ed_colon_formula(cubic, cubic.ideal(["x"]), ["x"])
    with raises(ValueError):
        ed_colon_formula(R, m, ["x"])


def test_superficial_sequence_status():
    R = _ring(["x", "y", "z"])
    m = R.maximal_ideal()
    assert superficial_sequence_status(R, m, []) is None
    assert superficial_sequence_status(R, m, ["x", "y"]) is None
    # x^2 is in m^2, never superficial for m
    assert 1 == superficial_sequence_status(R, m, ["x^2", "y"], 2, 4)


def _ring(names, relations=()):
    return PresentedLocalRing(PolyRing(names), relations)
