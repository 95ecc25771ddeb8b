from typing import Any, Dict, Iterable, List, Tuple

from samuel.exceptions import RingMismatchError
from samuel.utils.assertion import assert_or_throw

# exponent vectors are plain tuples, arity is the number of ambient variables
Monomial = Tuple[int, ...]


def one(arity: int) -> Monomial:
    return (0,) * arity


def degree(m: Monomial) -> int:
    return sum(m)


def mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def div(a: Monomial, b: Monomial) -> Monomial:
    """``a / b``, only valid when ``b`` divides ``a``"""
    return tuple(x - y for x, y in zip(a, b))


def divides(a: Monomial, b: Monomial) -> bool:
    """Whether ``a`` divides ``b``"""
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x >= y else y for x, y in zip(a, b))


def gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x <= y else y for x, y in zip(a, b))


def coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def support(m: Monomial) -> Tuple[int, ...]:
    """Indices of the variables occurring in ``m``"""
    return tuple(i for i, e in enumerate(m) if e > 0)


def pure_power_index(m: Monomial) -> int:
    """The variable index if ``m`` is a pure power ``x_i^k`` with ``k > 0``,
    otherwise -1
    """
    s = support(m)
    return s[0] if len(s) == 1 else -1


def monomials_of_degree(arity: int, deg: int) -> List[Monomial]:
    """All exponent vectors of ``arity`` variables with total degree ``deg``,
    in lexicographically descending order
    """
    if arity == 0:
        return [()] if deg == 0 else []
    if arity == 1:
        return [(deg,)]
    res: List[Monomial] = []
    for first in range(deg, -1, -1):
        for rest in monomials_of_degree(arity - 1, deg - first):
            res.append((first,) + rest)
    return res


def minimalize(monos: Iterable[Monomial]) -> List[Monomial]:
    """Minimal generators of the monomial ideal generated by ``monos``,
    sorted by degree then lexicographically descending
    """
    unique = sorted(set(monos), key=lambda m: (sum(m), tuple(-e for e in m)))
    kept: List[Monomial] = []
    for m in unique:
        dm = sum(m)
        # a divisor of m different from m has strictly smaller degree
        if not any(sum(g) < dm and divides(g, m) for g in kept):
            kept.append(m)
    return kept


class MonomialOrder(object):
    """A global monomial order, compared through sort keys: ``key(a) < key(b)``
    iff ``a < b``. Keys are memoized per order instance.

    :param kind: ``degrevlex``, ``lex`` or ``elim``
    :param block: for ``elim``, the number of leading variables eliminated;
        the order is degrevlex on the first block, ties broken by degrevlex on
        the remaining variables

    :Examples:
    >>> o = MonomialOrder("degrevlex")
    >>> assert o.compare((2, 0), (1, 1)) == 1  # x^2 > xy
    """

    KINDS = ["degrevlex", "lex", "elim"]

    def __init__(self, kind: str = "degrevlex", block: int = 0):
        assert_or_throw(kind in self.KINDS, ValueError(f"{kind} is not an order"))
        if kind == "elim":
            assert_or_throw(block >= 1, ValueError("elim order needs block >= 1"))
        else:
            block = 0
        self._kind = kind
        self._block = block
        self._keys: Dict[Monomial, Tuple[int, ...]] = {}
        self._rkeys: Dict[Monomial, Tuple[int, ...]] = {}

    @property
    def kind(self) -> str:
        return self._kind

    @property
    def block(self) -> int:
        return self._block

    @property
    def is_degree_compatible(self) -> bool:
        return self._kind == "degrevlex"

    def key(self, m: Monomial) -> Tuple[int, ...]:
        k = self._keys.get(m)
        if k is None:
            k = self._make_key(m)
            self._keys[m] = k
        return k

    def rkey(self, m: Monomial) -> Tuple[int, ...]:
        """Reversed key: ``rkey(a) < rkey(b)`` iff ``a > b``, for min-heaps"""
        k = self._rkeys.get(m)
        if k is None:
            k = tuple(-x for x in self.key(m))
            self._rkeys[m] = k
        return k

    def compare(self, a: Monomial, b: Monomial) -> int:
        """Compare two monomials

        :param a: first exponent vector
        :param b: second exponent vector
        :raises RingMismatchError: if the arities differ
        :return: -1 if ``a < b``, 0 if equal, 1 if ``a > b``
        """
        assert_or_throw(
            len(a) == len(b),
            RingMismatchError(f"arity mismatch {len(a)} != {len(b)}"),
        )
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def _make_key(self, m: Monomial) -> Tuple[int, ...]:
        if self._kind == "lex":
            return m
        if self._kind == "degrevlex":
            return (sum(m),) + tuple(-e for e in reversed(m))
        head, tail = m[: self._block], m[self._block :]
        return (
            (sum(head),)
            + tuple(-e for e in reversed(head))
            + (sum(tail),)
            + tuple(-e for e in reversed(tail))
        )

    def __eq__(self, other: Any) -> bool:
        return (
            isinstance(other, MonomialOrder)
            and self._kind == other._kind
            and self._block == other._block
        )

    def __hash__(self) -> int:
        return hash((self._kind, self._block))

    def __repr__(self) -> str:
        if self._kind == "elim":
            return f"elim({self._block})"
        return self._kind

    def __getstate__(self) -> Dict[str, Any]:
        d = dict(self.__dict__)
        d["_keys"] = {}
        d["_rkeys"] = {}
        return d


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")


def elimination_order(block: int) -> MonomialOrder:
    """Block order eliminating the first ``block`` variables"""
    return MonomialOrder("elim", block)
