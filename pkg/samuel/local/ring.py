import logging
from typing import Any, Iterable, List, Optional, Sequence

from samuel.core.monomial import DEGREVLEX
from samuel.core.polynomial import PolyRing, Polynomial
from samuel.exceptions import RingMismatchError
from samuel.groebner.ideal import (
    IdealHandle,
    ideal_colon,
    ideal_equal,
    ideal_intersection,
    krull_dimension,
    saturation,
)
from samuel.utils.assertion import assert_arg_not_none, assert_or_throw
from samuel.utils.hash import to_uuid
from samuel.utils.threading import RunOnce

_LOG = logging.getLogger(__name__)


class PresentedLocalRing(object):
    """The local ring ``R = (S/J)`` localized at the origin, where ``S`` is a
    polynomial ring and every relation vanishes at the origin. The Gröbner
    basis of ``J`` and the dimension are computed on construction, after
    that the object is read only.

    :param ring: the ambient polynomial ring ``S``, degrevlex ordered
    :param relations: generators of ``J``
    :param name: optional label used in reports

    :Examples:
    >>> S = PolyRing(["u", "x"])
    >>> R = PresentedLocalRing(S, ["u^2", "u*x"])
    >>> assert R.dim == 1
    >>> assert R.ideal([]).colon(R.element("x")) == R.ideal(["u"])
    """

    def __init__(self, ring: PolyRing, relations: Iterable[Any] = (), name: str = ""):
        assert_arg_not_none(ring, "ring")
        assert_or_throw(
            ring.order == DEGREVLEX,
            ValueError(f"{ring} must use degrevlex, local rings need a global order"),
        )
        self._ring = ring
        self._name = name
        self._defining = IdealHandle(ring, [ring(r) for r in relations])
        for r in self._defining.generators:
            assert_or_throw(
                r.constant_coeff() == 0,
                ValueError(f"relation {r} does not vanish at the origin"),
            )
        self._gb = self._defining.groebner_basis()
        self._dim = krull_dimension(self._defining)
        _LOG.debug(
            "%s: J basis has %s elements, dim %s", self, len(self._gb), self._dim
        )

    @property
    def name(self) -> str:
        return self._name

    @property
    def ring(self) -> PolyRing:
        return self._ring

    @property
    def variables(self) -> List[str]:
        return list(self._ring.variables)

    @property
    def defining_ideal(self) -> IdealHandle:
        return self._defining

    @property
    def relations(self) -> List[Polynomial]:
        return self._defining.generators

    @property
    def dim(self) -> int:
        return self._dim

    def element(self, f: Any) -> "RingElement":
        """The image of ``f`` (polynomial, text or scalar) in ``R``"""
        if isinstance(f, RingElement):
            assert_or_throw(f.ring == self, RingMismatchError(f"{f} is not in {self}"))
            return f
        return RingElement(self, self._ring(f))

    @property
    def gens(self) -> List["RingElement"]:
        return [self.element(g) for g in self._ring.gens]

    def ideal(self, gens: Iterable[Any]) -> "QuotientIdeal":
        return QuotientIdeal(self, [self.element(g) for g in gens])

    def zero_ideal(self) -> "QuotientIdeal":
        return QuotientIdeal(self, [], lift=self._defining)

    def unit_ideal(self) -> "QuotientIdeal":
        return self.ideal([1])

    def maximal_ideal(self) -> "QuotientIdeal":
        return self.ideal(self._ring.gens)

    def quotient(self, elements: Iterable[Any], name: str = "") -> "PresentedLocalRing":
        """``R / (elements)`` as a new presented ring over the same ``S``"""
        extra = [self.element(e).lift for e in elements]
        return PresentedLocalRing(
            self._ring,
            self._defining.generators + [f for f in extra if f],
            name=name or self._name,
        )

    def is_regular(self) -> bool:
        """Whether ``R`` is a polynomial ring, i.e. ``J`` is zero"""
        return len(self._gb) == 0

    def __eq__(self, other: Any) -> bool:
        if self is other:
            return True
        return (
            isinstance(other, PresentedLocalRing)
            and self._ring == other._ring
            and self._gb == other._gb
        )

    def __hash__(self) -> int:
        return hash((self._ring, tuple(self._gb)))

    def __repr__(self) -> str:
        rels = ", ".join(str(g) for g in self._defining.generators)
        return f"{self._ring.field}[{','.join(self._ring.variables)}]/({rels})"

    def __uuid__(self) -> str:
        return to_uuid(self._ring, [str(g) for g in self._gb])


class RingElement(object):
    """An element of a presented local ring, represented by its normal form
    against the basis of ``J``; zero iff the representative is zero
    """

    __slots__ = ["_ring", "_rep"]

    def __init__(self, ring: PresentedLocalRing, f: Polynomial):
        self._ring = ring
        self._rep = ring.defining_ideal.reduce(f)

    @property
    def ring(self) -> PresentedLocalRing:
        return self._ring

    @property
    def lift(self) -> Polynomial:
        return self._rep

    def is_zero(self) -> bool:
        return self._rep.is_zero()

    def value_at_origin(self) -> Any:
        """``f(0)``, well defined since ``J`` vanishes at the origin; the element
        is a unit of the local ring iff this is nonzero
        """
        return self._rep.constant_coeff()

    def is_unit(self) -> bool:
        return self.value_at_origin() != 0

    def __add__(self, other: Any) -> "RingElement":
        return RingElement(self._ring, self._rep + self._ring.element(other)._rep)

    def __radd__(self, other: Any) -> "RingElement":
        return self.__add__(other)

    def __sub__(self, other: Any) -> "RingElement":
        return RingElement(self._ring, self._rep - self._ring.element(other)._rep)

    def __rsub__(self, other: Any) -> "RingElement":
        return self._ring.element(other).__sub__(self)

    def __neg__(self) -> "RingElement":
        return RingElement(self._ring, -self._rep)

    def __mul__(self, other: Any) -> "RingElement":
        return RingElement(self._ring, self._rep * self._ring.element(other)._rep)

    def __rmul__(self, other: Any) -> "RingElement":
        return self.__mul__(other)

    def __pow__(self, n: int) -> "RingElement":
        assert_or_throw(
            isinstance(n, int) and n >= 0, ValueError(f"invalid exponent {n}")
        )
        res, base = self._ring.element(1), self
        while n > 0:
            if n & 1:
                res = res * base
            base = base * base
            n >>= 1
        return res

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, RingElement):
            return self._ring == other._ring and self._rep == other._rep
        return False

    def __hash__(self) -> int:
        return hash(self._rep)

    def __str__(self) -> str:
        return str(self._rep)

    def __repr__(self) -> str:
        return f"RingElement({self._rep!s})"

    def __uuid__(self) -> str:
        return to_uuid(self._ring, str(self._rep))


class QuotientIdeal(object):
    """An ideal of a presented local ring, stored through its lift to ``S``;
    the lift always contains ``J`` so every ``S`` level operation is an ``R``
    level operation. Two ideals are equal iff their lifts have the same reduced
    Gröbner basis.

    :param ring: the presented ring
    :param gens: generators in ``R``
    :param lift: the lift, if already known; must contain ``J``
    """

    def __init__(
        self,
        ring: PresentedLocalRing,
        gens: Sequence[RingElement],
        lift: Optional[IdealHandle] = None,
    ):
        self._ring = ring
        self._gens = [ring.element(g) for g in gens]
        if lift is None:
            lift = ring.defining_ideal.with_generators(
                [g.lift for g in self._gens if not g.is_zero()]
            )
        self._lift = lift
        self._powers = RunOnce(self._compute_power)

    @staticmethod
    def from_lift(ring: PresentedLocalRing, lift: IdealHandle) -> "QuotientIdeal":
        """Wrap an ideal of ``S`` known to contain ``J``"""
        gens = [g for g in lift.generators if not ring.element(g).is_zero()]
        return QuotientIdeal(ring, [ring.element(g) for g in gens], lift=lift)

    @property
    def ring(self) -> PresentedLocalRing:
        return self._ring

    @property
    def generators(self) -> List[RingElement]:
        return list(self._gens)

    @property
    def lift(self) -> IdealHandle:
        return self._lift

    def is_unit(self) -> bool:
        return self._lift.is_unit()

    def contains(self, f: Any) -> bool:
        return self._lift.contains(self._ring.element(f).lift)

    def __contains__(self, f: Any) -> bool:
        return self.contains(f)

    def is_subset(self, other: "QuotientIdeal") -> bool:
        self._check(other)
        return all(other.contains(g) for g in self._gens)

    def __add__(self, other: "QuotientIdeal") -> "QuotientIdeal":
        self._check(other)
        return QuotientIdeal(
            self._ring,
            self._gens + other._gens,
            lift=self._lift.with_generators(
                [g.lift for g in other._gens if not g.is_zero()]
            ),
        )

    def __mul__(self, other: "QuotientIdeal") -> "QuotientIdeal":
        self._check(other)
        prods = dict.fromkeys(f * g for f in self._gens for g in other._gens)
        return QuotientIdeal(self._ring, [p for p in prods if not p.is_zero()])

    def power(self, n: int) -> "QuotientIdeal":
        """``self^n`` in ``R``, cached incrementally; ``self^0`` is the unit
        ideal
        """
        assert_or_throw(
            isinstance(n, int) and n >= 0, ValueError(f"invalid exponent {n}")
        )
        return self._powers(n)

    def __pow__(self, n: int) -> "QuotientIdeal":
        return self.power(n)

    def colon(self, f: Any) -> "QuotientIdeal":
        """``(self : f)`` in ``R``, i.e. ``(lift : f)`` in ``S``; colon by a
        zero element is the unit ideal
        """
        e = self._ring.element(f)
        if e.is_zero():
            return self._ring.unit_ideal()
        return QuotientIdeal.from_lift(self._ring, ideal_colon(self._lift, e.lift))

    def colon_ideal(self, other: "QuotientIdeal") -> "QuotientIdeal":
        self._check(other)
        res = self._ring.unit_ideal()
        for g in other._gens:
            if not g.is_zero():
                res = res.intersection(self.colon(g))
        return res

    def intersection(self, other: "QuotientIdeal") -> "QuotientIdeal":
        self._check(other)
        if self.is_unit():
            return other
        if other.is_unit():
            return self
        return QuotientIdeal.from_lift(
            self._ring, ideal_intersection(self._lift, other._lift)
        )

    def saturation(self, other: "QuotientIdeal") -> "QuotientIdeal":
        """``(self : other^∞)`` in ``R``"""
        self._check(other)
        gens = [g.lift for g in other._gens if not g.is_zero()]
        if len(gens) == 0:
            return self._ring.unit_ideal()
        sat = saturation(self._lift, IdealHandle(self._ring.ring, gens))
        return QuotientIdeal.from_lift(self._ring, sat)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, QuotientIdeal):
            return False
        self._check(other)
        return ideal_equal(self._lift, other._lift)

    def __ne__(self, other: Any) -> bool:
        return not self.__eq__(other)

    def __hash__(self) -> int:
        return hash(self._lift)

    def __repr__(self) -> str:
        return "(" + ", ".join(str(g) for g in self._gens) + ")"

    def __uuid__(self) -> str:
        return to_uuid(self._ring, self._lift)

    def _check(self, other: "QuotientIdeal") -> None:
        assert_or_throw(
            self._ring == other._ring,
            RingMismatchError(f"{self._ring} != {other._ring}"),
        )

    def _compute_power(self, n: int) -> "QuotientIdeal":
        if n == 0:
            return self._ring.unit_ideal()
        if n == 1:
            return self
        return self._powers(n - 1) * self
