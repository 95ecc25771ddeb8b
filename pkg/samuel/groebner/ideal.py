import itertools
import logging
from typing import Any, Iterable, Iterator, List, Optional, Sequence

from samuel.core import monomial as mono
from samuel.core.monomial import DEGREVLEX, Monomial, elimination_order
from samuel.core.polynomial import PolyRing, Polynomial
from samuel.exceptions import NotZeroDimensionalError
from samuel.groebner.buchberger import groebner_basis, reduce
from samuel.utils.assertion import (
    assert_arg_not_none,
    assert_or_throw,
    assert_same_ring,
)
from samuel.utils.hash import to_uuid
from samuel.utils.threading import RunOnce

_LOG = logging.getLogger(__name__)


class IdealHandle(object):
    """An ideal of a polynomial ring given by generators, with a lazily
    computed and cached reduced Gröbner basis. Handles are immutable: changing
    generators means creating a new handle, so a cached basis never goes
    stale. The cache is thread safe, concurrent callers compute it once.

    :param ring: the ambient ring
    :param generators: polynomials or polynomial text
    :param seed: an ideal contained in this one whose basis can seed the
        computation, only pairs with the remaining generators are processed
    :param basis: a known reduced Gröbner basis of this ideal, trusted as is

    :Examples:
    >>> R = PolyRing(["x", "y"])
    >>> a = IdealHandle(R, ["x^2", "x*y"])
    >>> assert R("x^3") in a
    >>> assert a.colon(R("x")) == IdealHandle(R, ["x", "y"])
    """

    def __init__(
        self,
        ring: PolyRing,
        generators: Iterable[Any] = (),
        seed: Optional["IdealHandle"] = None,
        basis: Optional[List[Polynomial]] = None,
    ):
        assert_arg_not_none(ring, "ring")
        self._ring = ring
        self._gens = tuple(ring(g) for g in generators)
        if seed is not None:
            assert_same_ring(self, seed)
        self._seed = seed
        self._basis = basis
        self._gb = RunOnce(self._compute_gb)
        self._powers = RunOnce(self._compute_power)

    @staticmethod
    def unit(ring: PolyRing) -> "IdealHandle":
        return IdealHandle(ring, [ring.one()], basis=[ring.one()])

    @staticmethod
    def zero(ring: PolyRing) -> "IdealHandle":
        return IdealHandle(ring, [], basis=[])

    @staticmethod
    def maximal(ring: PolyRing) -> "IdealHandle":
        """The ideal of the origin, generated by all variables"""
        return IdealHandle(ring, ring.gens, basis=_sorted(ring, ring.gens))

    @property
    def ring(self) -> PolyRing:
        return self._ring

    @property
    def generators(self) -> List[Polynomial]:
        return list(self._gens)

    @property
    def has_groebner_basis(self) -> bool:
        return self._basis is not None or self._gb.is_cached()

    def groebner_basis(self) -> List[Polynomial]:
        """The reduced Gröbner basis under the ring's order, computed once"""
        return list(self._gb())

    def leading_monomials(self) -> List[Monomial]:
        return [g.leading_monomial for g in self._gb()]

    def is_unit(self) -> bool:
        gb = self._gb()
        return len(gb) == 1 and gb[0].is_constant()

    def is_zero(self) -> bool:
        return all(g.is_zero() for g in self._gens)

    def is_monomial(self) -> bool:
        return all(g.is_zero() or g.is_monomial() for g in self._gens)

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self._gens)

    def reduce(self, f: Any) -> Polynomial:
        """Normal form against the reduced Gröbner basis"""
        return reduce(self._ring(f), self._gb())

    def contains(self, f: Any) -> bool:
        return membership(self._ring(f), self)

    def __contains__(self, f: Any) -> bool:
        return self.contains(f)

    def is_subset(self, other: "IdealHandle") -> bool:
        """Whether this ideal is contained in ``other``"""
        assert_same_ring(self, other)
        if other.has_groebner_basis and other.is_unit():
            return True
        return all(membership(g, other) for g in self._gens)

    def with_generators(self, generators: Iterable[Any]) -> "IdealHandle":
        """A new handle for ``self + (generators)``, seeded by this basis"""
        return IdealHandle(
            self._ring, list(self._gens) + list(generators), seed=self
        )

    def power(self, n: int) -> "IdealHandle":
        """``self^n``, cached incrementally as ``self^(n-1) * self``"""
        assert_or_throw(
            isinstance(n, int) and n >= 0, ValueError(f"invalid exponent {n}")
        )
        return self._powers(n)

    def colon(self, f: Any) -> "IdealHandle":
        return ideal_colon(self, self._ring(f))

    def __add__(self, other: "IdealHandle") -> "IdealHandle":
        return ideal_sum(self, other)

    def __mul__(self, other: "IdealHandle") -> "IdealHandle":
        return ideal_product(self, other)

    def __pow__(self, n: int) -> "IdealHandle":
        return self.power(n)

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, IdealHandle) and ideal_equal(self, other)

    def __ne__(self, other: Any) -> bool:
        return not self.__eq__(other)

    def __hash__(self) -> int:
        return hash(tuple(self._gb()))

    def __len__(self) -> int:
        return len(self._gens)

    def __repr__(self) -> str:
        return "(" + ", ".join(str(g) for g in self._gens) + ")"

    def __uuid__(self) -> str:
        return to_uuid(self._ring, [str(g) for g in self._gb()])

    def __getstate__(self) -> Any:
        d = dict(self.__dict__)
        if self._gb.is_cached():
            d["_basis"] = self._gb()
        return d

    def _compute_gb(self) -> List[Polynomial]:
        if self._basis is not None:
            return list(self._basis)
        if self._seed is not None:
            known = self._seed.groebner_basis()
            extra = self._gens[len(self._seed._gens) :]
            return groebner_basis(extra, self._ring, known=known)
        return groebner_basis(self._gens, self._ring)

    def _compute_power(self, n: int) -> "IdealHandle":
        if n == 0:
            return IdealHandle.unit(self._ring)
        if n == 1:
            return self
        return ideal_product(self._powers(n - 1), self)


def ideal_sum(a: IdealHandle, b: IdealHandle) -> IdealHandle:
    """``a + b``, seeded by the basis of ``a`` when it is already known"""
    assert_same_ring(a, b)
    if a.has_groebner_basis:
        return a.with_generators(b.generators)
    if b.has_groebner_basis:
        return b.with_generators(a.generators)
    return IdealHandle(a.ring, a.generators + b.generators)


def ideal_product(a: IdealHandle, b: IdealHandle) -> IdealHandle:
    """``a * b`` from pairwise products of generators, duplicates removed"""
    assert_same_ring(a, b)
    prods = dict.fromkeys(
        f * g for f in a.generators for g in b.generators if f and g
    )
    gens = list(prods)
    if all(g.is_monomial() for g in gens):
        lms = mono.minimalize(g.leading_monomial for g in gens)
        gens = [a.ring.term(m) for m in lms]
    return IdealHandle(a.ring, gens)


def ideal_power(a: IdealHandle, n: int) -> IdealHandle:
    """``a^n``, the unit ideal for ``n = 0``

    :raises ValueError: for negative ``n``
    """
    return a.power(n)


def membership(f: Polynomial, a: IdealHandle) -> bool:
    assert_or_throw(f.ring == a.ring, ValueError(f"{f} is not in {a.ring}"))
    return a.reduce(f).is_zero()


def ideal_equal(a: IdealHandle, b: IdealHandle) -> bool:
    """Equality of ideals by comparing reduced Gröbner bases, which are
    unique for the shared order
    """
    assert_same_ring(a, b)
    if a is b:
        return True
    return a.groebner_basis() == b.groebner_basis()


def ideal_intersection(a: IdealHandle, b: IdealHandle) -> IdealHandle:
    """``a ∩ b`` by eliminating ``t`` from ``t*a + (1-t)*b``. Monomial ideals
    use pairwise lcms, and containment short-circuits

    :Examples:
    >>> R = PolyRing(["x", "y"])
    >>> c = ideal_intersection(IdealHandle(R, ["x"]), IdealHandle(R, ["y"]))
    >>> assert c == IdealHandle(R, ["x*y"])
    """
    assert_same_ring(a, b)
    ring = a.ring
    if a.is_zero() or b.is_zero():
        return IdealHandle.zero(ring)
    if a.is_monomial() and b.is_monomial():
        lcms = mono.minimalize(
            mono.lcm(f.leading_monomial, g.leading_monomial)
            for f in a.generators
            if f
            for g in b.generators
            if g
        )
        return IdealHandle(ring, [ring.term(m) for m in lcms])
    if a.is_subset(b):
        return a
    if b.is_subset(a):
        return b
    big = ring.extend([ring.fresh_name("t")], elimination_order(1))
    shift = list(range(1, ring.nvars + 1))
    t = big.gen(0)
    gens = [t * f.change_ring(big, shift) for f in a.generators if f] + [
        (1 - t) * g.change_ring(big, shift) for g in b.generators if g
    ]
    gb = groebner_basis(gens, big)
    kept = _contract(gb, ring, 1)
    _LOG.debug("intersection: kept %s of %s basis elements", len(kept), len(gb))
    if ring.order == DEGREVLEX:
        # the t-free part of an elimination basis is the reduced basis of the
        # contraction under the induced order
        return IdealHandle(ring, kept, basis=_sorted(ring, kept))
    return IdealHandle(ring, kept)


def ideal_colon(a: IdealHandle, f: Polynomial) -> IdealHandle:
    """``(a : f) = {g : g*f in a}``, computed as ``(a ∩ (f)) / f``

    :raises ValueError: if ``f`` is zero
    """
    assert_or_throw(f.ring == a.ring, ValueError(f"{f} is not in {a.ring}"))
    assert_or_throw(not f.is_zero(), ValueError("colon by the zero polynomial"))
    ring = a.ring
    if f.is_constant():
        return a
    if a.is_zero():
        return a
    if a.has_groebner_basis and a.is_unit():
        return a
    if f.is_monomial() and a.is_monomial():
        fm = f.leading_monomial
        quots = mono.minimalize(
            mono.div(g.leading_monomial, mono.gcd(g.leading_monomial, fm))
            for g in a.generators
            if g
        )
        return IdealHandle(ring, [ring.term(m) for m in quots])
    inter = ideal_intersection(a, IdealHandle(ring, [f]))
    quots = []
    for g in inter.generators:
        q, r = g.divmod_by(f)
        assert_or_throw(r.is_zero(), ArithmeticError(f"{f} does not divide {g}"))
        quots.append(q)
    return IdealHandle(ring, quots)


def ideal_colon_ideal(a: IdealHandle, b: IdealHandle) -> IdealHandle:
    """``(a : b)``, the intersection of the colons by the generators of ``b``;
    the whole ring when ``b`` is zero
    """
    assert_same_ring(a, b)
    gens = [g for g in b.generators if g]
    if len(gens) == 0:
        return IdealHandle.unit(a.ring)
    res = ideal_colon(a, gens[0])
    for g in gens[1:]:
        res = ideal_intersection(res, ideal_colon(a, g))
    return res


def saturation(a: IdealHandle, b: IdealHandle) -> IdealHandle:
    """``(a : b^∞)``, iterating colons until two consecutive results agree

    :raises ValueError: if ``b`` is zero
    """
    assert_same_ring(a, b)
    assert_or_throw(not b.is_zero(), ValueError("saturation by the zero ideal"))
    cur = a
    steps = 0
    while True:
        nxt = ideal_colon_ideal(cur, b)
        steps += 1
        if ideal_equal(cur, nxt):
            _LOG.debug("saturation stable after %s colons", steps)
            return cur
        cur = nxt


def elimination(a: IdealHandle, k: int) -> IdealHandle:
    """``a`` intersected with the subring of all but the first ``k`` variables,
    as an ideal of that subring (degrevlex)

    :param a: the ideal
    :param k: number of leading variables to eliminate, ``0`` returns ``a``
    """
    ring = a.ring
    assert_or_throw(
        0 <= k <= ring.nvars, ValueError(f"can't eliminate {k} of {ring.nvars}")
    )
    if k == 0:
        return a
    elim_ring = ring.with_order(elimination_order(k))
    gb = groebner_basis(
        [elim_ring.from_dict(g.term_dict) for g in a.generators], elim_ring
    )
    sub = ring.drop_leading(k)
    kept = _contract(gb, sub, k)
    return IdealHandle(sub, kept, basis=_sorted(sub, kept))


def colength(a: IdealHandle) -> int:
    """``dim_k S/a`` as the number of standard monomials of the leading term
    ideal

    :raises NotZeroDimensionalError: if some variable has no pure power among
        the leading monomials
    """
    if a.is_unit():
        return 0
    return sum(count_standard_monomials(a))


def count_standard_monomials(
    a: IdealHandle, max_degree: Optional[int] = None
) -> List[int]:
    """Number of standard monomials per degree, see
    :func:`~.iter_standard_counts`

    :param a: the ideal
    :param max_degree: count only degrees below this bound; without it ``a``
        must be zero dimensional
    :raises NotZeroDimensionalError: without ``max_degree`` on a
        non-zero-dimensional ideal
    :return: counts for degrees ``0, 1, ...``, trailing zeros omitted
    """
    if max_degree is None:
        assert_zero_dimensional(a)
    return list(itertools.islice(iter_standard_counts(a), max_degree))


def iter_standard_counts(a: IdealHandle) -> Iterator[int]:
    """Yield the number of standard monomials of degree ``0, 1, ...`` by a
    graded walk: a monomial of degree ``k+1`` is standard iff it is not a
    leading monomial and dividing it by any of its variables gives a standard
    monomial of degree ``k``. Stops after the last nonzero count, which only
    happens for zero dimensional ideals.
    """
    n = a.ring.nvars
    if a.is_unit():
        return
    lms = set(a.leading_monomials())
    level = [mono.one(n)]
    while len(level) > 0:
        yield len(level)
        current = set(level)
        nxt: List[Monomial] = []
        for u in level:
            last = max(mono.support(u), default=0)
            for i in range(last, n):
                v = u[:i] + (u[i] + 1,) + u[i + 1 :]
                if v in lms:
                    continue
                if all(
                    e == 0 or (v[:j] + (e - 1,) + v[j + 1 :]) in current
                    for j, e in enumerate(v)
                ):
                    nxt.append(v)
        level = nxt


def is_zero_dimensional(a: IdealHandle) -> bool:
    """Whether every variable has a pure power among the leading monomials"""
    if a.is_unit():
        return True
    pure = {mono.pure_power_index(m) for m in a.leading_monomials()}
    return all(i in pure for i in range(a.ring.nvars))


def assert_zero_dimensional(a: IdealHandle) -> None:
    """
    :raises NotZeroDimensionalError: if ``S/a`` is not finite dimensional
    """
    if not is_zero_dimensional(a):
        pure = {mono.pure_power_index(m) for m in a.leading_monomials()}
        missing = [v for i, v in enumerate(a.ring.variables) if i not in pure]
        raise NotZeroDimensionalError(f"{a} has no pure power of {missing}")


def krull_dimension(a: IdealHandle) -> int:
    """Dimension of ``S/a``: the size of the largest set of variables that
    contains the support of no leading monomial; ``-1`` for the unit ideal
    """
    if a.is_unit():
        return -1
    n = a.ring.nvars
    supports = [set(mono.support(m)) for m in a.leading_monomials()]
    for size in range(n, -1, -1):
        for subset in itertools.combinations(range(n), size):
            s = set(subset)
            if not any(sup <= s for sup in supports):
                return size
    return 0  # pragma: no cover


def _contract(gb: Sequence[Polynomial], ring: PolyRing, k: int) -> List[Polynomial]:
    res: List[Polynomial] = []
    for g in gb:
        if all(not any(m[:k]) for m in g.term_dict):
            res.append(ring.from_dict({m[k:]: c for m, c in g.term_dict.items()}))
    return res


def _sorted(ring: PolyRing, polys: List[Polynomial]) -> List[Polynomial]:
    return sorted(polys, key=lambda g: ring.order.key(g.leading_monomial))
