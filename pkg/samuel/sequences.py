import logging
import random
from typing import Any, Dict, List, Optional, Sequence, Tuple

from samuel.constants import (
    SAMUEL_DEFAULT_C_WINDOW,
    SAMUEL_DEFAULT_SEARCH_ATTEMPTS,
    SAMUEL_DEFAULT_SEARCH_RANGES,
    SAMUEL_DEFAULT_SEED,
    SAMUEL_DEFAULT_SUPERFICIAL_NMAX,
)
from samuel.exceptions import SearchExhaustedError
from samuel.local.ring import PresentedLocalRing, QuotientIdeal, RingElement
from samuel.utils.assertion import assert_or_throw

_LOG = logging.getLogger(__name__)


class SequenceReport(object):
    """Outcome of a sequence check. ``conditions`` lists every evaluated
    condition as ``(label, passed)`` in evaluation order; the verdict is true
    iff all of them passed. On failure ``failing_index`` and ``witness``
    describe the first failing condition.

    :param kind: ``regular``, ``d-sequence`` or ``superficial``
    :param elements: the checked elements
    """

    def __init__(self, kind: str, elements: Sequence[RingElement]):
        self.kind = kind
        self.elements: List[RingElement] = list(elements)
        self.conditions: List[Tuple[str, bool]] = []
        self.failing_index: Optional[Any] = None
        self.witness: List[str] = []
        self.window: Dict[str, int] = {}

    @property
    def verdict(self) -> bool:
        return all(ok for _, ok in self.conditions)

    def __bool__(self) -> bool:
        return self.verdict

    def add(self, label: str, passed: bool, index: Any = None, *witness: Any) -> bool:
        self.conditions.append((label, passed))
        if not passed and self.failing_index is None:
            self.failing_index = index
            self.witness = [str(w) for w in witness]
        return passed

    def to_dict(self) -> Dict[str, Any]:
        res: Dict[str, Any] = dict(
            kind=self.kind,
            elements=[str(x) for x in self.elements],
            verdict=self.verdict,
            conditions=[[k, v] for k, v in self.conditions],
        )
        if self.failing_index is not None:
            res["failing_index"] = self.failing_index
            res["witness"] = list(self.witness)
        if len(self.window) > 0:
            res["window"] = dict(self.window)
        return res

    def __repr__(self) -> str:
        status = "true" if self.verdict else f"false at {self.failing_index}"
        return f"{self.kind}({', '.join(str(x) for x in self.elements)}): {status}"


def is_regular_sequence(
    ring: PresentedLocalRing, xs: Sequence[Any]
) -> SequenceReport:
    """Check ``((x_1..x_(i-1)) : x_i) = (x_1..x_(i-1))`` for every ``i``. The
    elements must also be non units so that ``R/(xs) != 0``

    :param ring: the presented ring
    :param xs: the elements, in order
    :return: the report, the failing index is 1-based

    :Examples:
    >>> R = PresentedLocalRing(PolyRing(["x", "y"]), ["x*y"])
    >>> report = is_regular_sequence(R, ["x", "y"])
    >>> assert not report and report.failing_index == 1
    """
    elements = [ring.element(x) for x in xs]
    report = SequenceReport("regular", elements)
    prev = ring.zero_ideal()
    for i, x in enumerate(elements, start=1):
        if not report.add(f"x_{i} is not a unit", not x.is_unit(), i, x):
            break
        colon = prev.colon(x)
        if not report.add(f"({prev} : x_{i}) = {prev}", colon == prev, i, prev, colon):
            break
        prev = prev + ring.ideal([x])
    _LOG.debug("%s", report)
    return report


def is_d_sequence(ring: PresentedLocalRing, xs: Sequence[Any]) -> SequenceReport:
    """Check that ``xs`` is a d-sequence: no ``x_i`` lies in the ideal of the
    others, and with ``x_0 = 0``,
    ``((x_0..x_i) : x_(i+1) x_j) = ((x_0..x_i) : x_j)`` for ``0 <= i < r`` and
    ``j >= i+1``

    :param ring: the presented ring
    :param xs: nonempty list of elements
    :return: the report, failing index is ``i`` for the first condition and
        ``[i, j]`` for the second
    """
    elements = [ring.element(x) for x in xs]
    assert_or_throw(len(elements) > 0, ValueError("empty sequence"))
    report = SequenceReport("d-sequence", elements)
    r = len(elements)
    for i in range(r):
        others = ring.ideal(elements[:i] + elements[i + 1 :])
        if not report.add(
            f"x_{i + 1} not in the ideal of the others",
            not others.contains(elements[i]),
            i + 1,
            elements[i],
            others,
        ):
            return report
    prev = ring.zero_ideal()
    for i in range(r):
        # prev is (x_0, .., x_i), x_0 = 0
        colons: Dict[int, QuotientIdeal] = {}
        for j in range(i + 1, r + 1):
            xj = elements[j - 1]
            left = prev.colon(elements[i] * xj)
            if j not in colons:
                colons[j] = prev.colon(xj)
            right = colons[j]
            if not report.add(
                f"(x_0..x_{i} : x_{i + 1} x_{j}) = (x_0..x_{i} : x_{j})",
                left == right,
                [i, j],
                left,
                right,
            ):
                _LOG.debug("%s", report)
                return report
        prev = prev + ring.ideal([elements[i]])
    _LOG.debug("%s", report)
    return report


def is_superficial(
    ring: PresentedLocalRing,
    ideal: QuotientIdeal,
    x: Any,
    c_window: int = SAMUEL_DEFAULT_C_WINDOW,
    n_max: int = SAMUEL_DEFAULT_SUPERFICIAL_NMAX,
) -> SequenceReport:
    """Window certificate of superficiality: some ``1 <= c <= c_window`` with
    ``(Q^(n+1) : x) ∩ Q^c = Q^n`` for every ``c <= n <= n_max``. The report's
    ``window`` carries ``c`` (when found), ``c_window`` and ``n_max``; a true
    verdict is a finite certificate, not a proof

    :param ring: the presented ring
    :param ideal: ``Q``, m-primary
    :param x: an element of ``Q``
    :param c_window: largest ``c`` tried
    :param n_max: largest ``n`` checked
    :return: the report
    """
    e = ring.element(x)
    assert_or_throw(ideal.contains(e), ValueError(f"{e} is not in {ideal}"))
    assert_or_throw(
        1 <= c_window <= n_max, ValueError(f"invalid window {c_window}, {n_max}")
    )
    report = SequenceReport("superficial", [e])
    report.window = dict(c_window=c_window, n_max=n_max)
    colons: Dict[int, QuotientIdeal] = {}

    def holds(n: int, c: int) -> bool:
        if n not in colons:
            colons[n] = ideal.power(n + 1).colon(e)
        return colons[n].intersection(ideal.power(c)) == ideal.power(n)

    # a pass for c passes for every larger c, so failures move c forward
    c, n = 1, 1
    while c <= c_window and n <= n_max:
        if holds(n, c):
            n += 1
        else:
            c += 1
            n = max(n, c)
    if c <= c_window:
        report.window["c"] = c
        report.add(f"(Q^(n+1) : x) ∩ Q^{c} = Q^n for {c} <= n <= {n_max}", True)
    else:
        report.add(
            f"no c <= {c_window} works up to n = {n_max}",
            False,
            n,
            colons[n] if n in colons else "",
        )
    _LOG.debug("%s, window %s", report, report.window)
    return report


def superficial_sequence_search(
    ring: PresentedLocalRing,
    ideal: QuotientIdeal,
    k: int,
    attempts: int = SAMUEL_DEFAULT_SEARCH_ATTEMPTS,
    seed: int = SAMUEL_DEFAULT_SEED,
    c_window: int = SAMUEL_DEFAULT_C_WINDOW,
    n_max: int = SAMUEL_DEFAULT_SUPERFICIAL_NMAX,
    ranges: Sequence[int] = SAMUEL_DEFAULT_SEARCH_RANGES,
) -> List[RingElement]:
    """Search ``k`` elements of ``Q`` forming a superficial sequence. Each
    candidate is a random combination of the generators of ``Q`` with integer
    coefficients in ``[-r, r]``, certified by :func:`is_superficial` in the
    quotient by the elements already chosen. ``r`` starts at ``ranges[0]``
    (``5`` by default) and widens to the next value when a position fails
    ``attempts`` times. Deterministic for a fixed seed

    :param ring: the presented ring
    :param ideal: ``Q``, m-primary
    :param k: number of elements, at most ``dim R``
    :param attempts: candidates tried per position and per range
    :param seed: random seed
    :param ranges: increasing coefficient bounds
    :raises SearchExhaustedError: if a position fails in every range
    :return: the elements, in ``ring``
    """
    assert_or_throw(
        0 <= k <= ring.dim, ValueError(f"k={k} must be in [0, {ring.dim}]")
    )
    assert_or_throw(
        len(ranges) > 0 and all(r >= 0 for r in ranges),
        ValueError(f"invalid coefficient ranges {ranges}"),
    )
    rand = random.Random(seed)
    gens = ideal.generators
    chosen: List[RingElement] = []
    current = ring
    for pos in range(k):
        cq = current.ideal([g.lift for g in gens])
        found: Optional[RingElement] = None
        for bound in ranges:
            found = _search_position(
                ring, current, cq, gens, rand, bound, attempts, c_window, n_max
            )
            if found is not None:
                _LOG.debug("position %s: %s in [-%s, %s]", pos + 1, found, bound, bound)
                break
            _LOG.debug("position %s: widening beyond [-%s, %s]", pos + 1, bound, bound)
        if found is None:
            _LOG.warning(
                "no superficial element at position %s in %s attempts per range",
                pos + 1,
                attempts,
            )
            raise SearchExhaustedError(
                f"no superficial element at position {pos + 1} in {attempts} "
                f"attempts for each range {list(ranges)}, try larger windows"
            )
        chosen.append(found)
        current = ring.quotient(chosen)
    return chosen


def _search_position(
    ring: PresentedLocalRing,
    current: PresentedLocalRing,
    cq: QuotientIdeal,
    gens: List[RingElement],
    rand: random.Random,
    bound: int,
    attempts: int,
    c_window: int,
    n_max: int,
) -> Optional[RingElement]:
    for _ in range(attempts):
        coeffs = [rand.randint(-bound, bound) for _ in gens]
        if all(c == 0 for c in coeffs):
            continue
        candidate = ring.element(0)
        for c, g in zip(coeffs, gens):
            candidate = candidate + g * c
        if candidate.is_zero():
            continue
        if is_superficial(current, cq, candidate.lift, c_window, n_max):
            return candidate
    return None
