import logging
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from math import comb
from typing import Any, Dict, List, Optional, Sequence, Tuple

import pandas as pd

from samuel.constants import (
    SAMUEL_DEFAULT_NCAP,
    SAMUEL_DEFAULT_NMAX,
    SAMUEL_DEFAULT_REDUCTION_CAP,
    SAMUEL_DEFAULT_WORKERS,
)
from samuel.exceptions import (
    NoPolynomialWindowError,
    NonIntegerCoefficientError,
    NotAReductionError,
)
from samuel.local.length import local_colength
from samuel.local.ring import PresentedLocalRing, QuotientIdeal, RingElement
from samuel.utils.assertion import assert_or_throw
from samuel.utils.hash import to_uuid

_LOG = logging.getLogger(__name__)


class HilbertTable(object):
    """Values ``H(Q, n) = λ(R/Q^n)`` for ``n = 0..n_max``

    :param ring: the presented ring
    :param ideal: the m-primary ideal ``Q``
    :param values: the lengths, ``values[0] == 0``
    """

    def __init__(
        self, ring: PresentedLocalRing, ideal: QuotientIdeal, values: Sequence[int]
    ):
        assert_or_throw(len(values) > 0 and values[0] == 0, ValueError("H(0) != 0"))
        self.ring = ring
        self.ideal = ideal
        self.values: Tuple[int, ...] = tuple(values)

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> int:
        """``H(n)``, zero for ``n <= 0``"""
        if n <= 0:
            return 0
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    def to_frame(self) -> pd.DataFrame:
        """The table with columns ``n``, ``H`` and the first difference ``h``"""
        h = [self.values[i + 1] - self.values[i] for i in range(self.n_max)]
        return pd.DataFrame(
            {
                "n": list(range(len(self.values))),
                "H": list(self.values),
                "h": h + [None],
            }
        )

    def __uuid__(self) -> str:
        return to_uuid(self.ring, self.ideal, list(self.values))


class HilbertCoefficients(object):
    """The Hilbert coefficients of ``P(Q, x) = Σ (-1)^i e_i C(x+d-1-i, d-i)``

    :param d: the dimension
    :param e: integers ``e_0..e_d``
    :param fit_window: table indices where the polynomial part was certified
    :param eta: postulation number, the largest ``n`` with ``H(n) != P(n)``
    """

    def __init__(
        self, d: int, e: Sequence[int], fit_window: Tuple[int, int], eta: int
    ):
        assert_or_throw(len(e) == d + 1, ValueError(f"{e} needs {d + 1} entries"))
        self.d = d
        self.e: Tuple[int, ...] = tuple(e)
        self.fit_window = fit_window
        self.eta = eta

    def polynomial(self, n: int) -> int:
        """``P(Q, n)``, exact for any integer ``n``"""
        d = self.d
        return sum(
            (-1) ** i * self.e[i] * binomial(n + d - 1 - i, d - i)
            for i in range(d + 1)
        )

    def __getitem__(self, i: int) -> int:
        return self.e[i]

    def to_dict(self) -> Dict[str, Any]:
        return dict(
            d=self.d, e=list(self.e), fit_window=list(self.fit_window), eta=self.eta
        )

    def __repr__(self) -> str:
        return f"e = {list(self.e)}, eta = {self.eta}"


class GradedSeries(object):
    """Hilbert function ``h_n = λ(Q^n/Q^(n+1))`` of the associated graded ring
    and, when certified, its rational form ``c(t)/(1-t)^d``

    :param h_values: ``h_0..h_(n_max-1)``
    :param d: the exponent of the denominator
    :param numerator: coefficients of ``c(t)`` if the closed form was found
    """

    def __init__(
        self, h_values: Sequence[int], d: int, numerator: Optional[Sequence[int]]
    ):
        self.h_values: Tuple[int, ...] = tuple(h_values)
        self.d = d
        self.numerator = None if numerator is None else tuple(numerator)

    @property
    def closed_form(self) -> Optional[str]:
        if self.numerator is None:
            return None
        num = _format_t_polynomial(self.numerator)
        if self.d == 0:
            return num
        den = "(1-t)" if self.d == 1 else f"(1-t)^{self.d}"
        if len([c for c in self.numerator if c != 0]) > 1:
            num = f"({num})"
        return f"{num}/{den}"

    def coefficients(self) -> Optional[List[int]]:
        """``e_i = c^(i)(1)/i!`` read off the numerator, ``None`` without a
        closed form
        """
        if self.numerator is None:
            return None
        return [
            sum(comb(k, i) * c for k, c in enumerate(self.numerator))
            for i in range(self.d + 1)
        ]

    def to_dict(self) -> Dict[str, Any]:
        return dict(
            h=list(self.h_values),
            d=self.d,
            numerator=None if self.numerator is None else list(self.numerator),
            closed_form=self.closed_form,
        )


class VVDepthCertificate(object):
    """Window limited Valabrega-Valla certificate: ``x_1*, .., x_k*`` form a
    regular sequence in ``G(Q)`` as far as degrees up to ``n_max`` show

    :param k: the certified length
    :param n_max: the largest degree tested
    :param reduction_reached: whether ``Q^n = (xs) Q^(n-1)`` held for some
        tested ``n``, past which the condition is automatic
    :param failure: ``(j, n)`` of the first failing check, if any
    """

    def __init__(
        self,
        k: int,
        n_max: int,
        reduction_reached: bool,
        failure: Optional[Tuple[int, int]] = None,
    ):
        self.k = k
        self.n_max = n_max
        self.reduction_reached = reduction_reached
        self.failure = failure

    def to_dict(self) -> Dict[str, Any]:
        return dict(
            k=self.k, n_max=self.n_max, reduction_reached=self.reduction_reached
        )


def hilbert_samuel_table(
    ring: PresentedLocalRing,
    ideal: QuotientIdeal,
    n_max: int = SAMUEL_DEFAULT_NMAX,
    n_cap: int = SAMUEL_DEFAULT_NCAP,
    workers: int = SAMUEL_DEFAULT_WORKERS,
) -> HilbertTable:
    """Compute ``H(Q, n) = λ(R/Q^n)`` for ``n = 0..n_max``. Entries are
    independent and may run on ``workers`` threads; the powers of ``Q`` are
    cached on the ideal so each is built once

    :param ring: the presented ring
    :param ideal: an m-primary ideal
    :param n_max: last index, at least ``dim R + 3``
    :param n_cap: truncation cap of the length engine
    :param workers: number of threads
    :raises ValueError: if ``n_max`` is too small to fit
    :raises NoStabilizationError: if ``Q`` is not m-primary
    :return: the table
    """
    assert_or_throw(
        n_max >= ring.dim + 3,
        ValueError(f"n_max={n_max} is too short for dimension {ring.dim}"),
    )

    def _length(n: int) -> int:
        value = local_colength(ring, ideal.power(n), n_cap)
        _LOG.debug("H(%s) = %s", n, value)
        return value

    indices = list(range(1, n_max + 1))
    if workers > 1:
        # powers are built incrementally, warm them in order first
        for n in indices:
            ideal.power(n)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(_length, indices))
    else:
        values = [_length(n) for n in indices]
    _LOG.info("hilbert table of %s in %s: %s", ideal, ring, [0] + values)
    return HilbertTable(ring, ideal, [0] + values)


def fit_coefficients(
    table: HilbertTable, d: Optional[int] = None
) -> HilbertCoefficients:
    """Fit the Hilbert-Samuel polynomial and read off ``e_0..e_d``. The
    ``(d+1)``-st forward difference must vanish on the trailing ``d+2``
    indices; ``P`` is interpolated through the last ``d+1`` values and
    ``e_(d-k) = (-1)^(d-k) ∇^k P(0)``

    :param table: the Hilbert table
    :param d: dimension, defaults to the ring dimension
    :raises NoPolynomialWindowError: if the table is too short to certify the
        polynomial part, increase ``n_max``
    :raises NonIntegerCoefficientError: if a coefficient is not an integer
    :return: the coefficients with the postulation number

    :Examples:
    >>> coeffs = fit_coefficients(table)
    >>> assert coeffs.polynomial(table.n_max) == table[table.n_max]
    """
    if d is None:
        d = table.ring.dim
    assert_or_throw(d >= 0, ValueError(f"invalid dimension {d}"))
    n_hi = table.n_max
    lo = n_hi - 2 * d - 2
    if lo < 0:
        raise NoPolynomialWindowError(
            f"{len(table)} values can't certify degree {d}, increase n_max"
        )
    for n in range(lo, n_hi - d):
        if _forward_difference(table.values, n, d + 1) != 0:
            raise NoPolynomialWindowError(
                f"H is not polynomial on [{lo}, {n_hi}], increase n_max"
            )
    points = list(range(n_hi - d, n_hi + 1))
    ys = [Fraction(table.values[n]) for n in points]

    def p(x: int) -> Fraction:
        return _lagrange(points, ys, x)

    e: List[int] = []
    for i in range(d + 1):
        k = d - i
        nabla = sum((-1) ** j * comb(k, j) * p(-j) for j in range(k + 1))
        value = (-1) ** i * nabla
        if value.denominator != 1:
            raise NonIntegerCoefficientError(
                f"e_{i} = {value} is not an integer, check the dimension {d}"
            )
        e.append(int(value))
    if d >= 0 and e[0] < 1:
        _LOG.warning("e_0 = %s < 1, %s may exceed the dimension", e[0], d)
    eta = n_hi
    while eta >= -d - 1 and table[eta] == p(eta):
        eta -= 1
    res = HilbertCoefficients(d, e, (lo, n_hi), eta)
    _LOG.debug("fitted %s on window %s", res, (lo, n_hi))
    return res


def graded_series(table: HilbertTable, d: Optional[int] = None) -> GradedSeries:
    """The Hilbert function of ``G(Q)``, ``h_n = H(n+1) - H(n)``, and the
    numerator ``c(t) = (1-t)^d Σ h_n t^n`` when its coefficients vanish on a
    trailing window of ``d+2`` indices

    :param table: the Hilbert table
    :param d: denominator exponent, defaults to the ring dimension
    :return: the series
    """
    if d is None:
        d = table.ring.dim
    h = [table.values[n + 1] - table.values[n] for n in range(table.n_max)]
    c = [
        sum((-1) ** j * comb(d, j) * h[k - j] for j in range(min(d, k) + 1))
        for k in range(len(h))
    ]
    window = d + 2
    numerator: Optional[List[int]] = None
    if len(c) > window and all(x == 0 for x in c[-window:]):
        last = max(i for i, x in enumerate(c) if x != 0) if any(c) else 0
        numerator = c[: last + 1]
    return GradedSeries(h, d, numerator)


def reduction_number(
    ring: PresentedLocalRing,
    ideal: QuotientIdeal,
    reduction: QuotientIdeal,
    cap: int = SAMUEL_DEFAULT_REDUCTION_CAP,
) -> int:
    """The least ``n <= cap`` with ``I^(n+1) = J I^n`` in ``R``

    :param ring: the presented ring
    :param ideal: ``I``
    :param reduction: ``J``, contained in ``I``
    :param cap: largest ``n`` tried
    :raises NotAReductionError: if no ``n <= cap`` works
    """
    assert_or_throw(
        ideal.ring == ring and reduction.ring == ring,
        ValueError("ideals must belong to the ring"),
    )
    assert_or_throw(
        reduction.is_subset(ideal), ValueError(f"{reduction} is not inside {ideal}")
    )
    for n in range(cap + 1):
        if ideal.power(n + 1) == reduction * ideal.power(n):
            return n
    raise NotAReductionError(f"{reduction} is not a reduction of {ideal} up to {cap}")


def vv_depth_certificate(
    ring: PresentedLocalRing,
    ideal: QuotientIdeal,
    xs: Sequence[RingElement],
    n_max: int = SAMUEL_DEFAULT_NMAX,
) -> VVDepthCertificate:
    """Valabrega-Valla test: the largest ``k`` such that ``x_1..x_k`` is a
    regular sequence of ``R`` and for every ``j <= k`` and ``2 <= n <= n_max``,
    ``(x_1..x_j) ∩ Q^n = (x_1..x_j) Q^(n-1)`` in ``R`` (``n = 1`` holds
    because the ``x_i`` are in ``Q``). A regularity failure of ``x_j`` is
    reported as ``(j, 0)``

    :param ring: the presented ring
    :param ideal: ``Q``, m-primary
    :param xs: elements of ``Q``
    :param n_max: largest degree tested
    :return: the certificate
    """
    xs = [ring.element(x) for x in xs]
    for x in xs:
        assert_or_throw(ideal.contains(x), ValueError(f"{x} is not in {ideal}"))
    k = 0
    failure: Optional[Tuple[int, int]] = None
    full = ring.ideal(xs)
    reached = any(
        ideal.power(n).is_subset(full * ideal.power(n - 1))
        for n in range(2, n_max + 1)
    )
    prev = ring.zero_ideal()
    for j in range(1, len(xs) + 1):
        if prev.colon(xs[j - 1]) != prev:
            failure = (j, 0)
            break
        xj = prev + ring.ideal([xs[j - 1]])
        for n in range(2, n_max + 1):
            prod = xj * ideal.power(n - 1)
            # Q^n inside X Q^(n-1) makes both sides equal to Q^n
            if ideal.power(n).is_subset(prod):
                continue
            if xj.intersection(ideal.power(n)) != prod:
                failure = (j, n)
                break
        if failure is not None:
            break
        k = j
        prev = xj
    _LOG.debug("vv depth of %s in %s: %s (window %s)", xs, ring, k, n_max)
    return VVDepthCertificate(k, n_max, reached, failure)


def vv_depth_bound(
    ring: PresentedLocalRing,
    ideal: QuotientIdeal,
    xs: Sequence[RingElement],
    n_max: int = SAMUEL_DEFAULT_NMAX,
) -> int:
    """Window limited lower bound of ``depth G(Q)``, see
    :func:`~.vv_depth_certificate`
    """
    return vv_depth_certificate(ring, ideal, xs, n_max).k


def binomial(x: int, k: int) -> int:
    """``C(x, k)`` for any integer ``x`` and ``k >= 0``, as a polynomial in
    ``x``; zero for ``k < 0``
    """
    if k < 0:
        return 0
    num = 1
    for i in range(k):
        num *= x - i
    den = 1
    for i in range(2, k + 1):
        den *= i
    return num // den


def _forward_difference(values: Sequence[int], n: int, order: int) -> int:
    return sum(
        (-1) ** (order - j) * comb(order, j) * values[n + j] for j in range(order + 1)
    )


def _lagrange(xs: Sequence[int], ys: Sequence[Fraction], x: int) -> Fraction:
    total = Fraction(0)
    for i, xi in enumerate(xs):
        term = ys[i]
        for j, xj in enumerate(xs):
            if j != i:
                term *= Fraction(x - xj, xi - xj)
        total += term
    return total


def _format_t_polynomial(coeffs: Sequence[int]) -> str:
    parts: List[str] = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        power = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
        if k == 0:
            body = str(abs(c))
        elif abs(c) == 1:
            body = power
        else:
            body = f"{abs(c)}*{power}"
        sign = "-" if c < 0 else ("+" if len(parts) > 0 else "")
        parts.append(sign + body)
    return "".join(parts) if len(parts) > 0 else "0"
