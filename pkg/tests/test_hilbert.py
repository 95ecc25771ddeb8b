from math import comb

from pytest import raises
from samuel.core import PolyRing
from samuel.exceptions import (
    NoPolynomialWindowError,
    NoStabilizationError,
    NotAReductionError,
)
from samuel.groebner import ideal_equal
from samuel.hilbert import (
    HilbertTable,
    binomial,
    fit_coefficients,
    graded_series,
    hilbert_samuel_table,
    reduction_number,
    vv_depth_bound,
    vv_depth_certificate,
)
from samuel.local import PresentedLocalRing
from samuel.utils.hash import to_uuid


def test_binomial():
    assert 10 == binomial(5, 2)
    assert 1 == binomial(-1, 0)
    assert -1 == binomial(-1, 3)
    assert 0 == binomial(2, 3)
    assert 0 == binomial(4, -1)
    for x in range(-5, 6):
        assert binomial(x + 1, 2) - binomial(x, 2) == binomial(x, 1)


def test_regular_ring():
    R = _ring(["x", "y", "z"])
    table = hilbert_samuel_table(R, R.maximal_ideal(), 10)
    assert [comb(n + 2, 3) for n in range(11)] == list(table.values)
    assert 10 == table.n_max
    assert 11 == len(table)
    assert 0 == table[-2]
    coeffs = fit_coefficients(table)
    assert (1, 0, 0, 0) == coeffs.e
    assert -3 == coeffs.eta
    assert (2, 10) == coeffs.fit_window
    assert 1 == coeffs[0]
    assert "e = [1, 0, 0, 0], eta = -3" == repr(coeffs)
    for n in range(11):
        assert table[n] == coeffs.polynomial(n)

    R = _ring(["x", "y"])
    coeffs = fit_coefficients(hilbert_samuel_table(R, R.maximal_ideal(), 8))
    assert (1, 0, 0) == coeffs.e
    assert -2 == coeffs.eta


def test_cubic_line():
    R = _ring(["x", "y"], ["y^3"])
    table = hilbert_samuel_table(R, R.ideal(["x"]), 6)
    assert [0, 3, 6, 9, 12, 15, 18] == list(table.values)
    coeffs = fit_coefficients(table)
    assert (3, 0) == coeffs.e
    assert dict(d=1, e=[3, 0], fit_window=[2, 6], eta=-1) == coeffs.to_dict()

    table = hilbert_samuel_table(R, R.maximal_ideal(), 6)
    assert [0, 1, 3, 6, 9, 12, 15] == list(table.values)
    coeffs = fit_coefficients(table)
    assert (3, 3) == coeffs.e
    assert 1 == coeffs.eta
    series = graded_series(table)
    assert (1, 2, 3, 3, 3, 3) == series.h_values
    assert (1, 1, 1) == series.numerator
    assert "(1+t+t^2)/(1-t)" == series.closed_form
    assert [3, 3] == series.coefficients()
    assert "(1+t+t^2)/(1-t)" == series.to_dict()["closed_form"]


def test_embedded_point():
    R = _ring(["u", "x"], ["u^2", "u*x"])
    table = hilbert_samuel_table(R, R.ideal(["x"]), 6)
    assert [0, 2, 3, 4, 5, 6, 7] == list(table.values)
    coeffs = fit_coefficients(table)
    assert (1, -1) == coeffs.e
    assert 0 == coeffs.eta
    frame = table.to_frame()
    assert ["n", "H", "h"] == list(frame.columns)
    assert [2, 1, 1, 1, 1, 1] == list(frame["h"][:-1])
    # x kills u, so x is not regular
    cert = vv_depth_certificate(R, R.ideal(["x"]), [R.element("x")], 4)
    assert 0 == cert.k
    assert (1, 0) == cert.failure


def test_table_options():
    R = _ring(["x", "y"], ["x*y"])
    q = R.ideal(["x + y"])
    serial = hilbert_samuel_table(R, q, 6)
    threaded = hilbert_samuel_table(R, R.ideal(["x + y"]), 6, workers=3)
    assert serial.values == threaded.values
    assert [0, 2, 4, 6, 8, 10, 12] == list(serial.values)
    assert to_uuid(serial) == to_uuid(threaded)
    raises(ValueError, lambda: hilbert_samuel_table(R, q, 3))
    regular = _ring(["x", "y"])
    raises(
        NoStabilizationError,
        lambda: hilbert_samuel_table(regular, regular.ideal(["x"]), 5),
    )
    raises(ValueError, lambda: HilbertTable(R, q, [1, 2]))


def test_fit_errors():
    R = _ring(["x", "y"], ["y^3"])
    table = hilbert_samuel_table(R, R.ideal(["x"]), 4)
    raises(NoPolynomialWindowError, lambda: fit_coefficients(table, 2))
    # quadratic values are not linear on any window
    quadratic = HilbertTable(R, R.ideal(["x"]), [n * n for n in range(8)])
    raises(NoPolynomialWindowError, lambda: fit_coefficients(quadratic))
    raises(ValueError, lambda: fit_coefficients(table, -1))
    # an overestimated dimension gives e_0 = 0
    table = hilbert_samuel_table(R, R.ideal(["x"]), 6)
    assert (0, -3, 0) == fit_coefficients(table, 2).e


def test_graded_series_without_closed_form():
    R = _ring(["x", "y"], ["y^3"])
    table = HilbertTable(R, R.ideal(["x"]), [0, 1, 3, 6, 10])
    series = graded_series(table, 1)
    assert series.numerator is None
    assert series.closed_form is None
    assert series.coefficients() is None
    regular = _ring(["x"])
    series = graded_series(hilbert_samuel_table(regular, regular.maximal_ideal(), 6))
    assert "1/(1-t)" == series.closed_form


def test_reduction_number():
    R = _ring(["x", "y", "z"])
    m = R.maximal_ideal()
    i = m ** 2
    j = R.ideal(["x^2", "y^2", "z^2"])
    # every degree 4 monomial in three variables has an exponent >= 2
    assert 1 == reduction_number(R, i, j)
    assert ideal_equal(i.power(3).lift, (j * i.power(2)).lift)
    assert ideal_equal(i.power(2).lift, (j * i).lift)
    assert not ideal_equal(i.lift, j.lift)
    assert 0 == reduction_number(R, m, m)
    partial = R.ideal(["x^2", "y^2"])
    raises(NotAReductionError, lambda: reduction_number(R, i, partial, 3))
    raises(ValueError, lambda: reduction_number(R, j, i))


def test_vv_depth():
    R = _ring(["x", "y"])
    m = R.maximal_ideal()
    cert = vv_depth_certificate(R, m, [R.element("x"), R.element("y")], 4)
    assert 2 == cert.k
    assert cert.reduction_reached
    assert cert.failure is None
    assert dict(k=2, n_max=4, reduction_reached=True) == cert.to_dict()

    node = _ring(["x", "y"], ["x*y"])
    assert 1 == vv_depth_bound(node, node.maximal_ideal(), [node.element("x + y")], 4)
    raises(
        ValueError,
        lambda: vv_depth_certificate(R, R.ideal(["x"]), [R.element("y")]),
    )


def _ring(names, relations=()):
    return PresentedLocalRing(PolyRing(names), relations)
