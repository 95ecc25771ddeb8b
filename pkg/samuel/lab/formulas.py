import logging
from typing import Any, List, Optional, Sequence, Tuple

from samuel.constants import (
    SAMUEL_DEFAULT_C_WINDOW,
    SAMUEL_DEFAULT_NCAP,
    SAMUEL_LAB_SUPERFICIAL_NMAX,
    SAMUEL_LAB_VV_NMAX,
)
from samuel.exceptions import HypothesisNotCertifiedError
from samuel.hilbert import (
    HilbertCoefficients,
    HilbertTable,
    fit_coefficients,
    hilbert_samuel_table,
    vv_depth_bound,
)
from samuel.lab.report import HypothesisStatus, TheoremReport, Verdict
from samuel.local.length import h0_length, subquotient_length
from samuel.local.ring import PresentedLocalRing, QuotientIdeal, RingElement
from samuel.sequences import is_superficial
from samuel.utils.assertion import assert_or_throw

_LOG = logging.getLogger(__name__)


def superficial_sequence_status(
    ring: PresentedLocalRing,
    ideal: QuotientIdeal,
    xs: Sequence[Any],
    c_window: int = SAMUEL_DEFAULT_C_WINDOW,
    n_max: int = SAMUEL_LAB_SUPERFICIAL_NMAX,
) -> Optional[int]:
    """Window check that ``xs`` is a superficial sequence for ``Q``: each
    ``x_i`` superficial for the image of ``Q`` in ``R/(x_1..x_(i-1))``

    :return: None if all pass, otherwise the 1-based failing position
    """
    elements = [ring.element(x) for x in xs]
    current = ring
    for i, x in enumerate(elements):
        if i > 0:
            current = ring.quotient(elements[:i])
        q = current.ideal([g.lift for g in ideal.generators])
        if not is_superficial(current, q, x.lift, c_window, n_max):
            return i + 1
    return None


def colon_formula_hypotheses(
    ring: PresentedLocalRing,
    ideal: QuotientIdeal,
    ys: Sequence[Any],
    c_window: int = SAMUEL_DEFAULT_C_WINDOW,
    superficial_nmax: int = SAMUEL_LAB_SUPERFICIAL_NMAX,
    vv_nmax: int = SAMUEL_LAB_VV_NMAX,
) -> List[str]:
    """The hypotheses of :func:`ed_colon_formula` that could not be certified,
    empty when all hold: ``Q^d = (ys) Q^(d-1)``, ``y_1..y_(d-1)`` superficial
    and ``depth G(Q) >= d-1``
    """
    d = ring.dim
    elements = [ring.element(y) for y in ys]
    unmet: List[str] = []
    j = ring.ideal(elements)
    if not j.is_subset(ideal) or ideal.power(d) != j * ideal.power(d - 1):
        unmet.append("reduction")
    pos = superficial_sequence_status(
        ring, ideal, elements[: d - 1], c_window, superficial_nmax
    )
    if pos is not None:
        unmet.append(f"superficial at {pos}")
    if vv_depth_bound(ring, ideal, elements, vv_nmax) < d - 1:
        unmet.append("depth G(Q) >= d-1")
    return unmet


def ed_colon_formula(
    ring: PresentedLocalRing,
    ideal: QuotientIdeal,
    ys: Sequence[Any],
    n_cap: int = SAMUEL_DEFAULT_NCAP,
    strict: bool = False,
    **windows: Any,
) -> int:
    """Compute ``-λ((((y_1..y_(d-1)) : y_d) ∩ (Q^(d-1) + (y_1..y_(d-1))))
    / (y_1..y_(d-1)))``, equal to ``e_d(Q)`` when ``(ys)`` is a reduction of
    ``Q`` with ``y_1..y_(d-1)`` superficial and ``depth G(Q) >= d-1``

    :param ring: the presented ring, of dimension ``d >= 2``
    :param ideal: ``Q``
    :param ys: ``d`` elements of ``Q``
    :param n_cap: truncation cap of the length engine
    :param strict: raise instead of warning when a hypothesis is uncertified
    :param windows: ``c_window``, ``superficial_nmax`` and ``vv_nmax``
    :raises HypothesisNotCertifiedError: in strict mode
    :return: the value
    """
    d = ring.dim
    assert_or_throw(d >= 2, ValueError(f"the colon formula needs d >= 2, got {d}"))
    elements = [ring.element(y) for y in ys]
    assert_or_throw(
        len(elements) == d, ValueError(f"{len(elements)} elements for dimension {d}")
    )
    unmet = colon_formula_hypotheses(ring, ideal, elements, **windows)
    if len(unmet) > 0:
        if strict:
            raise HypothesisNotCertifiedError(f"uncertified: {unmet}")
        _LOG.warning("colon formula on %s, uncertified: %s", ring, unmet)
    return colon_formula_value(ring, ideal, elements, n_cap)


def colon_formula_value(
    ring: PresentedLocalRing,
    ideal: QuotientIdeal,
    ys: Sequence[Any],
    n_cap: int = SAMUEL_DEFAULT_NCAP,
) -> int:
    """The value of :func:`ed_colon_formula` without hypothesis checks"""
    elements = [ring.element(y) for y in ys]
    d = len(elements)
    c = ring.ideal(elements[: d - 1])
    a = c.colon(elements[-1]).intersection(ideal.power(d - 1) + c)
    return -subquotient_length(ring, a, c, n_cap)


def lower_bound_surrogate(
    ring: PresentedLocalRing,
    ys: Sequence[Any],
    n_cap: int = SAMUEL_DEFAULT_NCAP,
) -> int:
    """``-λ(H^0_m(R/(y_1..y_(d-1))))``, a computable lower bound of ``e_d(Q)``
    standing in for ``-λ(H^(d-1)_m(R))``; only the first ``d-1`` of ``ys``
    are used
    """
    elements = [ring.element(y) for y in ys][: max(ring.dim - 1, 0)]
    c = ring.ideal(elements) if len(elements) > 0 else ring.zero_ideal()
    return -h0_length(ring, c, n_cap)


def idealization_coeffs(
    d: int, t: int, e_r: Sequence[int], e_d: Sequence[int]
) -> List[int]:
    """Hilbert coefficients of ``Q = qA`` on the idealization ``A = R ⋉ D``
    with ``dim D = t``: ``e_0(q, R)`` first, zeros for ``1 <= i <= d-t-1``,
    then ``(-1)^(d-t) e_(i-d+t)(q, D)``

    :param d: dimension of ``R``
    :param t: dimension of ``D``, ``1 <= t <= d-1``
    :param e_r: coefficients of ``q`` on ``R``, only ``e_0`` is used
    :param e_d: ``t+1`` coefficients of ``q`` on ``D``
    :return: ``d+1`` coefficients

    :Examples:
    >>> assert idealization_coeffs(4, 2, [1, 0, 0, 0, 0], [1, 0, 0]) == [1, 0, 1, 0, 0]
    """
    assert_or_throw(1 <= t <= d - 1, ValueError(f"t={t} must be in [1, {d - 1}]"))
    assert_or_throw(len(e_r) >= 1, ValueError("e_r is empty"))
    assert_or_throw(
        len(e_d) == t + 1, ValueError(f"e_d needs {t + 1} entries, got {len(e_d)}")
    )
    sign = (-1) ** (d - t)
    res = [e_r[0]] + [0] * (d - t - 1)
    res += [sign * e_d[i - d + t] for i in range(d - t, d + 1)]
    return res


def idealization_table(
    ring: PresentedLocalRing,
    p_gens: Sequence[Any],
    q_gens: Sequence[Any],
    n_max: int,
    n_cap: int = SAMUEL_DEFAULT_NCAP,
    workers: int = 1,
) -> Tuple[HilbertTable, HilbertTable, HilbertTable]:
    """Length tables of ``q`` on ``R`` and on ``D = R/p``, and their sum, the
    table of ``qA`` on ``A = R ⋉ D`` by additivity of length. The idealization
    itself is never built, the summed table is attached to ``R`` and ``q``
    """
    q = ring.ideal(q_gens)
    table_r = hilbert_samuel_table(ring, q, n_max, n_cap, workers)
    ring_d = ring.quotient(p_gens, name=f"{ring.name}/p")
    q_d = ring_d.ideal([g.lift for g in q.generators])
    table_d = hilbert_samuel_table(ring_d, q_d, n_max, n_cap, workers)
    values = [a + b for a, b in zip(table_r.values, table_d.values)]
    return table_r, table_d, HilbertTable(ring, q, values)


def idealization_cross_check(
    ring: PresentedLocalRing,
    p_gens: Sequence[Any],
    q_gens: Sequence[Any],
    n_max: int,
    n_cap: int = SAMUEL_DEFAULT_NCAP,
    workers: int = 1,
) -> TheoremReport:
    """Fit the summed length table of ``R`` and ``D = R/p`` in dimension
    ``d = dim R`` and compare with :func:`idealization_coeffs`

    :param ring: a regular presented ring
    :param p_gens: part of a regular system of parameters
    :param q_gens: generators of an m-primary ideal of ``R``
    :param n_max: table length, at least ``2 d + 2``
    :raises ValueError: if ``R`` is not regular or ``t`` is out of range
    :raises NoStabilizationError: if ``q`` is not m-primary
    :return: a report with one ``idealization`` claim
    """
    assert_or_throw(ring.is_regular(), ValueError(f"{ring} is not regular"))
    d = ring.dim
    table_r, table_d, table_a = idealization_table(
        ring, p_gens, q_gens, n_max, n_cap, workers
    )
    t = table_d.ring.dim
    assert_or_throw(1 <= t <= d - 1, ValueError(f"t={t} must be in [1, {d - 1}]"))
    fit_r: HilbertCoefficients = fit_coefficients(table_r, d)
    fit_d = fit_coefficients(table_d, t)
    fit_a = fit_coefficients(table_a, d)
    expected = idealization_coeffs(d, t, fit_r.e, fit_d.e)
    report = TheoremReport(instance=f"idealization d={d} t={t}")
    report.add(
        "idealization",
        HypothesisStatus.CERTIFIED,
        Verdict.VERIFIED if list(fit_a.e) == expected else Verdict.FAILURE,
        d=d,
        t=t,
        e_fit=list(fit_a.e),
        e_formula=expected,
    )
    _LOG.info("idealization d=%s t=%s: %s vs %s", d, t, list(fit_a.e), expected)
    return report
