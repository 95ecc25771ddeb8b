import logging
from typing import Iterator, List, Optional, Sequence

from samuel.constants import SAMUEL_DEFAULT_NCAP
from samuel.core import monomial as mono
from samuel.exceptions import NoStabilizationError
from samuel.groebner.ideal import (
    IdealHandle,
    colength,
    is_zero_dimensional,
    iter_standard_counts,
)
from samuel.local.ring import PresentedLocalRing, QuotientIdeal, RingElement
from samuel.utils.assertion import assert_or_throw

_LOG = logging.getLogger(__name__)


def local_colength(
    ring: PresentedLocalRing, a: QuotientIdeal, n_cap: int = SAMUEL_DEFAULT_NCAP
) -> int:
    """Length of ``R/a`` at the origin. Homogeneous lifts are counted from one
    Gröbner basis; lifts whose quotient is already local (zero dimensional with
    all variables nilpotent) give their colength; otherwise
    ``dim S/(lift + m^N)`` is computed for ``N = 1, 2, ...`` until two
    consecutive values agree with the previous one

    :param ring: the presented ring
    :param a: an ideal of ``ring``, m-primary
    :param n_cap: largest truncation degree tried
    :raises NoStabilizationError: if ``a`` is not m-primary or ``n_cap`` is too
        small
    :return: the local length

    :Examples:
    >>> R = PresentedLocalRing(PolyRing(["x"]))
    >>> assert local_colength(R, R.ideal(["x^2 - x"])) == 1
    """
    _check(ring, a)
    lift = a.lift
    if lift.is_unit():
        return 0
    if lift.is_homogeneous():
        if not is_zero_dimensional(lift):
            raise NoStabilizationError(f"{a} is not primary to the maximal ideal")
        return colength(lift)
    local = _artinian_colength(lift)
    if local is not None:
        return local
    return _stabilize(
        (_truncated_colength(lift, n) for n in range(1, n_cap + 1)),
        f"local colength of {a}",
    )


def subquotient_length(
    ring: PresentedLocalRing,
    a: QuotientIdeal,
    c: QuotientIdeal,
    n_cap: int = SAMUEL_DEFAULT_NCAP,
) -> int:
    """Length of ``(a + c)/c``, as the stabilized difference of truncated
    colengths of ``c`` and ``a + c``

    :param ring: the presented ring
    :param a: numerator ideal
    :param c: denominator ideal
    :param n_cap: largest truncation degree tried
    :raises NoStabilizationError: if the module is not of finite length
    :return: the length
    """
    _check(ring, a)
    _check(ring, c)
    if a.is_subset(c):
        return 0
    s = a + c
    lc, ls = c.lift, s.lift
    if lc.is_homogeneous() and ls.is_homogeneous():
        return _graded_length(lc, ls, _top_degree(a), n_cap)
    lc_local = _artinian_colength(lc)
    if lc_local is not None:
        ls_local = _artinian_colength(ls)
        if ls_local is not None:
            return lc_local - ls_local
    return _stabilize(
        (
            _truncated_colength(lc, n) - _truncated_colength(ls, n)
            for n in range(1, n_cap + 1)
        ),
        f"length of ({a} + {c})/{c}",
        start=_top_degree(a) + 1,
    )


def h0_length(
    ring: PresentedLocalRing, c: QuotientIdeal, n_cap: int = SAMUEL_DEFAULT_NCAP
) -> int:
    """Length of ``H^0_m(R/c)``, the elements killed by a power of the maximal
    ideal: ``(c : m^∞)/c``
    """
    _check(ring, c)
    csat = c.saturation(ring.maximal_ideal())
    return subquotient_length(ring, csat, c, n_cap)


def is_parameter_ideal(
    ring: PresentedLocalRing,
    gens: Sequence[RingElement],
    n_cap: int = SAMUEL_DEFAULT_NCAP,
) -> bool:
    """Whether ``gens`` are ``dim R`` elements generating an m-primary ideal"""
    if len(gens) != ring.dim:
        return False
    ideal = ring.ideal(gens)
    if ideal.is_unit():
        return False
    try:
        # a unit at the origin gives length zero
        return local_colength(ring, ideal, n_cap) > 0
    except NoStabilizationError:
        return False


def _check(ring: PresentedLocalRing, a: QuotientIdeal) -> None:
    assert_or_throw(a.ring == ring, ValueError(f"{a} is not an ideal of {ring}"))


def _artinian_colength(lift: IdealHandle) -> Optional[int]:
    # S/lift is local at the origin iff it is finite dimensional and every
    # variable is nilpotent; x^L = 0 with L the dimension then
    if not is_zero_dimensional(lift):
        return None
    total = colength(lift)
    if total == 0:
        return 0
    for x in lift.ring.gens:
        if not lift.reduce(x ** total).is_zero():
            return None
    return total


def _truncated_colength(lift: IdealHandle, n: int) -> int:
    ring = lift.ring
    trunc = [ring.term(m) for m in mono.monomials_of_degree(ring.nvars, n)]
    value = colength(lift.with_generators(trunc))
    _LOG.debug("truncation degree %s: colength %s", n, value)
    return value


def _top_degree(a: QuotientIdeal) -> int:
    return max((g.lift.degree for g in a.generators), default=0)


def _graded_length(lc: IdealHandle, ls: IdealHandle, top: int, n_cap: int) -> int:
    # graded pieces: dim (s/c)_k is the difference of standard monomial counts
    # in degree k; the module is generated in degrees <= top, so a zero piece
    # at k >= top means all higher pieces vanish
    counts_c = _padded(iter_standard_counts(lc))
    counts_s = _padded(iter_standard_counts(ls))
    total = 0
    for k in range(n_cap):
        diff = next(counts_c) - next(counts_s)
        total += diff
        if diff == 0 and k >= top:
            return total
    raise NoStabilizationError(
        f"graded length did not vanish below degree {n_cap}"
    )


def _padded(it: Iterator[int]) -> Iterator[int]:
    yield from it
    while True:
        yield 0


def _stabilize(values: Iterator[int], what: str, start: int = 1) -> int:
    history: List[int] = []
    for v in values:
        history.append(v)
        if (
            len(history) >= max(3, start + 2)
            and history[-1] == history[-2] == history[-3]
        ):
            _LOG.debug("%s stable at truncation %s: %s", what, len(history), v)
            return v
    raise NoStabilizationError(
        f"{what} did not stabilize within {len(history)} truncations"
    )

