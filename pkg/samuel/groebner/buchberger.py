import heapq
import logging
from typing import Any, Dict, List, Optional, Sequence, Tuple

from samuel.core import monomial as mono
from samuel.core.field import Field
from samuel.core.monomial import Monomial, MonomialOrder
from samuel.core.polynomial import PolyRing, Polynomial
from samuel.exceptions import RingMismatchError
from samuel.utils.assertion import assert_or_throw

_LOG = logging.getLogger(__name__)

Terms = Dict[Monomial, Any]


class _Divisor(object):
    __slots__ = ["lm", "lc_inv", "tail"]

    def __init__(self, terms: Terms, order: MonomialOrder, field: Field):
        self.lm = max(terms, key=order.key)
        self.lc_inv = field.inv(terms[self.lm])
        self.tail = [(m, c) for m, c in terms.items() if m != self.lm]


def normal_form(
    terms: Terms, divisors: Sequence[_Divisor], order: MonomialOrder, field: Field
) -> Terms:
    """Full multivariate division of ``terms`` by ``divisors``: repeatedly
    cancel the largest reducible term. Terms are kept in a heap keyed by the
    reversed order with lazy deletion of cancelled monomials.
    """
    if len(divisors) == 0 or len(terms) == 0:
        return dict(terms)
    p = dict(terms)
    heap = [(order.rkey(m), m) for m in p]
    heapq.heapify(heap)
    queued = set(p)
    rem: Terms = {}
    while heap:
        _, m = heapq.heappop(heap)
        queued.discard(m)
        c = p.pop(m, None)
        if c is None:
            continue
        d = _find_divisor(m, divisors)
        if d is None:
            rem[m] = c
            continue
        q = mono.div(m, d.lm)
        qc = field.norm(c * d.lc_inv)
        for gm, gc in d.tail:
            t = mono.mul(gm, q)
            v = field.norm(p.get(t, 0) - qc * gc)
            if v == 0:
                p.pop(t, None)
            else:
                p[t] = v
                if t not in queued:
                    queued.add(t)
                    heapq.heappush(heap, (order.rkey(t), t))
    return rem


def _find_divisor(m: Monomial, divisors: Sequence[_Divisor]) -> Optional[_Divisor]:
    for d in divisors:
        if mono.divides(d.lm, m):
            return d
    return None


def reduce(f: Polynomial, basis: Sequence[Polynomial]) -> Polynomial:
    """Normal form of ``f`` with respect to ``basis``: ``f - r`` lies in the
    ideal of ``basis`` and no term of ``r`` is divisible by a leading monomial
    of ``basis``. When ``basis`` is a Gröbner basis, ``r`` is zero iff ``f``
    is in the ideal.

    :param f: the polynomial to reduce
    :param basis: divisors, zero polynomials are ignored
    :raises RingMismatchError: if a divisor is in another ring
    :return: the remainder
    """
    ring = f.ring
    for g in basis:
        assert_or_throw(
            g.ring == ring, RingMismatchError(f"{g.ring} != {ring}")
        )
    divisors = [
        _Divisor(g.term_dict, ring.order, ring.field) for g in basis if not g.is_zero()
    ]
    return Polynomial(
        ring, normal_form(f.term_dict, divisors, ring.order, ring.field)
    )


def groebner_basis(
    gens: Sequence[Polynomial],
    ring: Optional[PolyRing] = None,
    known: Optional[Sequence[Polynomial]] = None,
) -> List[Polynomial]:
    """Reduced Gröbner basis of the ideal generated by ``gens`` (and ``known``)
    under the order of the ring. Buchberger's algorithm with the normal
    selection strategy and the Gebauer-Möller pair criteria.

    :param gens: generators, zero polynomials are dropped
    :param ring: the ambient ring, required only when ``gens`` is empty
    :param known: optional reduced Gröbner basis already satisfying the
        S-pair criterion; only pairs involving new generators are processed
    :return: monic elements sorted ascending by leading monomial; ``[]`` for the
        zero ideal and ``[1]`` for the unit ideal

    :Examples:
    >>> R = PolyRing(["x", "y"])
    >>> gb = groebner_basis([R("x^2+y^2-1"), R("x-y")])
    >>> assert [str(g) for g in gb] == ["x - y", "y^2 - 1/2"]
    """
    known = list(known or [])
    all_polys = list(gens) + known
    if ring is None:
        assert_or_throw(
            len(all_polys) > 0, ValueError("ring is required for empty generators")
        )
        ring = all_polys[0].ring
    for g in all_polys:
        assert_or_throw(g.ring == ring, RingMismatchError(f"{g.ring} != {ring}"))
    nonzero = [g for g in gens if not g.is_zero()]
    if any(g.is_constant() for g in nonzero + known):
        return [ring.one()]
    if len(nonzero) == 0:
        return _finish(ring, [g.term_dict for g in known])
    if all(g.is_monomial() for g in nonzero + known):
        return [
            ring.term(m)
            for m in sorted(
                mono.minimalize(g.leading_monomial for g in nonzero + known),
                key=ring.order.key,
            )
        ]
    engine = _Buchberger(ring)
    for g in sorted(known, key=lambda p: ring.order.key(p.leading_monomial)):
        engine.add_known(g.term_dict)
    res = engine.run(
        sorted(
            (g.term_dict for g in nonzero),
            key=lambda t: ring.order.key(max(t, key=ring.order.key)),
        )
    )
    return _finish(ring, res)


def _finish(ring: PolyRing, polys: List[Terms]) -> List[Polynomial]:
    order, field = ring.order, ring.field
    if any(len(t) == 1 and sum(next(iter(t))) == 0 for t in polys):
        return [ring.one()]
    divs = sorted(
        (_Divisor(t, order, field) for t in polys), key=lambda d: order.key(d.lm)
    )
    minimal: List[_Divisor] = []
    for d in divs:
        if not any(mono.divides(k.lm, d.lm) for k in minimal):
            minimal.append(d)
    res: List[Polynomial] = []
    for i, d in enumerate(minimal):
        red = normal_form(
            dict(d.tail), minimal[:i] + minimal[i + 1 :], order, field
        )
        terms = {m: field.norm(c * d.lc_inv) for m, c in red.items()}
        terms[d.lm] = field.one
        res.append(Polynomial(ring, terms))
    return res


class _Buchberger(object):
    """Mutable state of one Gröbner basis computation: the store of monic
    polynomials, the active basis indices and the pending critical pairs
    """

    def __init__(self, ring: PolyRing):
        self._ring = ring
        self._order = ring.order
        self._field = ring.field
        self._store: List[_Divisor] = []
        self._terms: List[Terms] = []
        self._active: List[int] = []
        self._pairs: Dict[Tuple[int, int], Monomial] = {}
        self._unit = False
        self._reductions = 0

    def add_known(self, terms: Terms) -> None:
        self._active.append(self._push(terms))

    def run(self, gens: List[Terms]) -> List[Terms]:
        for t in gens:
            self._insert(self._reduce(t))
            if self._unit:
                return [{mono.one(self._ring.nvars): self._field.one}]
        while self._pairs:
            pair = min(self._pairs, key=self._pair_key)
            lcm = self._pairs.pop(pair)
            h = self._reduce(self._spoly(pair[0], pair[1], lcm))
            self._insert(h)
            if self._unit:
                return [{mono.one(self._ring.nvars): self._field.one}]
        _LOG.debug(
            "groebner basis in %s: %s elements, %s reductions",
            self._ring,
            len(self._active),
            self._reductions,
        )
        return [self._terms[i] for i in self._active]

    def _pair_key(self, pair: Tuple[int, int]) -> Any:
        lcm = self._pairs[pair]
        return (sum(lcm), self._order.key(lcm), pair)

    def _push(self, terms: Terms) -> int:
        f = self._field
        d = _Divisor(terms, self._order, f)
        if d.lc_inv != 1:
            terms = {m: f.norm(c * d.lc_inv) for m, c in terms.items()}
            d = _Divisor(terms, self._order, f)
        self._store.append(d)
        self._terms.append(terms)
        return len(self._store) - 1

    def _reduce(self, terms: Terms) -> Terms:
        self._reductions += 1
        return normal_form(
            terms, [self._store[i] for i in self._active], self._order, self._field
        )

    def _spoly(self, i: int, j: int, lcm: Monomial) -> Terms:
        f = self._field
        res: Terms = {}
        for idx, sign in [(i, 1), (j, -1)]:
            d = self._store[idx]
            q = mono.div(lcm, d.lm)
            for m, c in d.tail:
                t = mono.mul(m, q)
                v = f.norm(res.get(t, 0) + sign * c)
                if v == 0:
                    res.pop(t, None)
                else:
                    res[t] = v
        return res

    def _insert(self, h: Terms) -> None:
        """Gebauer-Möller update of the pairs and the basis with a new
        nonzero normal form ``h``
        """
        if len(h) == 0:
            return
        k = self._push(h)
        lm_h = self._store[k].lm
        if sum(lm_h) == 0:
            self._unit = True
            return
        is_mono_h = len(h) == 1
        new: Dict[int, Monomial] = {
            g: mono.lcm(lm_h, self._store[g].lm) for g in self._active
        }
        # chain criterion among the new pairs
        candidates = list(new.items())
        survivors: List[Tuple[int, Monomial]] = []
        for idx, (g, lcm) in enumerate(candidates):
            if mono.coprime(lm_h, self._store[g].lm):
                survivors.append((g, lcm))
                continue
            rest = candidates[idx + 1 :] + survivors
            if not any(
                other != lcm and mono.divides(other, lcm) for _, other in rest
            ) and not any(
                other == lcm for _, other in survivors
            ):
                survivors.append((g, lcm))
        # product criterion, monomial pairs have zero S-polynomials
        kept_new = [
            (g, lcm)
            for g, lcm in survivors
            if not mono.coprime(lm_h, self._store[g].lm)
            and not (is_mono_h and len(self._store[g].tail) == 0)
        ]
        # old pairs made redundant by h
        for (a, b), lcm in list(self._pairs.items()):
            if (
                mono.divides(lm_h, lcm)
                and mono.lcm(self._store[a].lm, lm_h) != lcm
                and mono.lcm(self._store[b].lm, lm_h) != lcm
            ):
                del self._pairs[(a, b)]
        for g, lcm in kept_new:
            self._pairs[(g, k)] = lcm
        self._active = [
            g for g in self._active if not mono.divides(lm_h, self._store[g].lm)
        ] + [k]
