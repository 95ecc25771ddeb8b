from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from samuel.core import monomial as mono
from samuel.core.field import QQ, Field
from samuel.core.monomial import DEGREVLEX, Monomial, MonomialOrder
from samuel.exceptions import RingMismatchError
from samuel.utils.assertion import assert_or_throw
from samuel.utils.string import assert_variable_name

Term = Tuple[Monomial, Any]


class PolyRing(object):
    """Ambient polynomial ring ``k[x_1..x_n]`` with a monomial order. Polynomials
    of different rings never mix; two rings are equal iff variables, field and
    order are equal

    :param variables: variable names, the first is the largest in every order
    :param field: coefficient field, defaults to the rationals
    :param order: monomial order, defaults to degrevlex
    """

    def __init__(
        self,
        variables: Sequence[str],
        field: Field = QQ,
        order: MonomialOrder = DEGREVLEX,
    ):
        names = [assert_variable_name(v) for v in variables]
        assert_or_throw(
            len(set(names)) == len(names), ValueError(f"duplicated names {names}")
        )
        if order.kind == "elim":
            assert_or_throw(
                order.block <= len(names),
                ValueError(f"can't eliminate {order.block} of {len(names)} vars"),
            )
        self._variables = tuple(names)
        self._field = field
        self._order = order
        self._index = {v: i for i, v in enumerate(names)}

    @property
    def variables(self) -> Tuple[str, ...]:
        return self._variables

    @property
    def nvars(self) -> int:
        return len(self._variables)

    @property
    def field(self) -> Field:
        return self._field

    @property
    def order(self) -> MonomialOrder:
        return self._order

    def index(self, name: str) -> int:
        assert_or_throw(name in self._index, KeyError(f"{name} is not a variable"))
        return self._index[name]

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, value: Any) -> "Polynomial":
        return self.term(mono.one(self.nvars), value)

    def term(self, m: Monomial, coeff: Any = 1) -> "Polynomial":
        assert_or_throw(
            len(m) == self.nvars,
            RingMismatchError(f"arity {len(m)} != {self.nvars}"),
        )
        c = self._field.convert(coeff)
        return Polynomial(self, {tuple(m): c} if c != 0 else {})

    def gen(self, name_or_index: Union[str, int]) -> "Polynomial":
        i = (
            self.index(name_or_index)
            if isinstance(name_or_index, str)
            else name_or_index
        )
        m = [0] * self.nvars
        m[i] = 1
        return self.term(tuple(m))

    @property
    def gens(self) -> List["Polynomial"]:
        return [self.gen(i) for i in range(self.nvars)]

    def from_dict(self, terms: Dict[Monomial, Any]) -> "Polynomial":
        res: Dict[Monomial, Any] = {}
        for m, c in terms.items():
            assert_or_throw(
                len(m) == self.nvars,
                RingMismatchError(f"arity {len(m)} != {self.nvars}"),
            )
            v = self._field.convert(c)
            if v != 0:
                res[tuple(m)] = v
        return Polynomial(self, res)

    def parse(self, text: str) -> "Polynomial":
        """Parse polynomial text such as ``x*y^3 - 2/3*z``, see
        :func:`~samuel.core.parser.parse_polynomial`
        """
        from samuel.core.parser import parse_polynomial

        return parse_polynomial(self, text)

    def __call__(self, obj: Any) -> "Polynomial":
        """Coerce a string, scalar or polynomial of this ring"""
        if isinstance(obj, Polynomial):
            assert_or_throw(
                obj.ring == self, RingMismatchError(f"{obj} is not in {self}")
            )
            return obj
        if isinstance(obj, str):
            return self.parse(obj)
        return self.constant(obj)

    def with_order(self, order: MonomialOrder) -> "PolyRing":
        return PolyRing(self._variables, self._field, order)

    def extend(
        self, names: Sequence[str], order: Optional[MonomialOrder] = None
    ) -> "PolyRing":
        """A ring with ``names`` prepended to the variables, used for
        elimination with auxiliary variables

        :param names: new variable names, must not clash
        :param order: order of the new ring, defaults to eliminating ``names``
        """
        if order is None:
            order = mono.elimination_order(len(names))
        return PolyRing(list(names) + list(self._variables), self._field, order)

    def drop_leading(self, k: int, order: MonomialOrder = DEGREVLEX) -> "PolyRing":
        """The ring without the first ``k`` variables"""
        return PolyRing(self._variables[k:], self._field, order)

    def fresh_name(self, base: str = "t") -> str:
        name, i = base, 0
        while name in self._index:
            i += 1
            name = f"{base}{i}"
        return name

    def __eq__(self, other: Any) -> bool:
        return (
            isinstance(other, PolyRing)
            and self._variables == other._variables
            and self._field == other._field
            and self._order == other._order
        )

    def __hash__(self) -> int:
        return hash((self._variables, self._field, self._order))

    def __repr__(self) -> str:
        return f"{self._field}[{','.join(self._variables)}]<{self._order}>"

    def __uuid__(self) -> str:
        return repr(self)


class Polynomial(object):
    """Immutable polynomial in canonical form: a map from exponent vectors to
    nonzero field elements, listed in descending order of the ring's
    monomial order. Construct through :class:`PolyRing`.

    :param ring: the ambient ring
    :param terms: exponent vector to nonzero coefficient, already normalized
    """

    __slots__ = ["_ring", "_terms", "_sorted", "_hash"]

    def __init__(self, ring: PolyRing, terms: Dict[Monomial, Any]):
        self._ring = ring
        self._terms = terms
        self._sorted: Optional[List[Monomial]] = None
        self._hash: Optional[int] = None

    @property
    def ring(self) -> PolyRing:
        return self._ring

    @property
    def term_dict(self) -> Dict[Monomial, Any]:
        """The underlying map, callers must not mutate it"""
        return self._terms

    @property
    def monomials(self) -> List[Monomial]:
        """Exponent vectors in descending order"""
        if self._sorted is None:
            self._sorted = sorted(self._terms, key=self._ring.order.key, reverse=True)
        return self._sorted

    @property
    def terms(self) -> List[Term]:
        return [(m, self._terms[m]) for m in self.monomials]

    def is_zero(self) -> bool:
        return len(self._terms) == 0

    def __bool__(self) -> bool:
        return len(self._terms) > 0

    def __len__(self) -> int:
        return len(self._terms)

    def is_constant(self) -> bool:
        return self.is_zero() or (
            len(self._terms) == 1 and sum(next(iter(self._terms))) == 0
        )

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_homogeneous(self) -> bool:
        return len(set(sum(m) for m in self._terms)) <= 1

    @property
    def leading_monomial(self) -> Monomial:
        assert_or_throw(not self.is_zero(), ValueError("zero has no leading term"))
        return self.monomials[0]

    @property
    def leading_coeff(self) -> Any:
        return self._terms[self.leading_monomial]

    @property
    def degree(self) -> int:
        """Total degree, -1 for the zero polynomial"""
        return max((sum(m) for m in self._terms), default=-1)

    def constant_coeff(self) -> Any:
        return self._terms.get(mono.one(self._ring.nvars), self._ring.field.zero)

    def coeff(self, m: Monomial) -> Any:
        return self._terms.get(tuple(m), self._ring.field.zero)

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self.scale(self._ring.field.inv(self.leading_coeff))

    def scale(self, c: Any) -> "Polynomial":
        f = self._ring.field
        c = f.convert(c) if not isinstance(c, type(f.one)) else c
        if c == 0:
            return self._ring.zero()
        terms = {m: f.norm(v * c) for m, v in self._terms.items()}
        return Polynomial(self._ring, terms)

    def evaluate(self, point: Sequence[Any]) -> Any:
        """Evaluate at a point of field elements, exactly

        :param point: one value per variable
        :return: the field value
        """
        f = self._ring.field
        assert_or_throw(
            len(point) == self._ring.nvars,
            RingMismatchError(f"point has {len(point)} coordinates"),
        )
        vals = [f.convert(v) for v in point]
        total = f.zero
        for m, c in self._terms.items():
            t = c
            for v, e in zip(vals, m):
                if e:
                    t = f.norm(t * v ** e)
            total = f.norm(total + t)
        return total

    def change_ring(self, ring: PolyRing, positions: Sequence[int]) -> "Polynomial":
        """Embed into ``ring``, variable ``i`` of this ring becomes variable
        ``positions[i]`` of the target; other exponents are zero

        :param ring: target ring, same field
        :param positions: target index of each variable
        """
        assert_or_throw(
            ring.field == self._ring.field, RingMismatchError("field mismatch")
        )
        res: Dict[Monomial, Any] = {}
        for m, c in self._terms.items():
            target = [0] * ring.nvars
            for i, e in enumerate(m):
                target[positions[i]] = e
            res[tuple(target)] = c
        return Polynomial(ring, res)

    def divmod_by(self, g: "Polynomial") -> Tuple["Polynomial", "Polynomial"]:
        """Division by a single polynomial: ``self = q * g + r`` with no term of
        ``r`` divisible by the leading monomial of ``g``. Since ``{g}`` is a
        Gröbner basis of ``(g)``, ``r`` is zero iff ``g`` divides ``self``
        """
        self._check(g)
        assert_or_throw(not g.is_zero(), ZeroDivisionError("division by zero"))
        f = self._ring.field
        lm, lc_inv = g.leading_monomial, f.inv(g.leading_coeff)
        p = dict(self._terms)
        q: Dict[Monomial, Any] = {}
        r: Dict[Monomial, Any] = {}
        key = self._ring.order.key
        while p:
            m = max(p, key=key)
            c = p[m]
            if mono.divides(lm, m):
                qm = mono.div(m, lm)
                qc = f.norm(c * lc_inv)
                q[qm] = f.norm(q.get(qm, 0) + qc)
                for gm, gc in g._terms.items():
                    t = mono.mul(gm, qm)
                    v = f.norm(p.get(t, 0) - qc * gc)
                    if v == 0:
                        p.pop(t, None)
                    else:
                        p[t] = v
            else:
                r[m] = c
                del p[m]
        return (
            Polynomial(self._ring, {m: c for m, c in q.items() if c != 0}),
            Polynomial(self._ring, r),
        )

    def __add__(self, other: Any) -> "Polynomial":
        other = self._coerce(other)
        f = self._ring.field
        res = dict(self._terms)
        for m, c in other._terms.items():
            v = f.norm(res.get(m, 0) + c)
            if v == 0:
                res.pop(m, None)
            else:
                res[m] = v
        return Polynomial(self._ring, res)

    def __radd__(self, other: Any) -> "Polynomial":
        return self.__add__(other)

    def __neg__(self) -> "Polynomial":
        f = self._ring.field
        return Polynomial(self._ring, {m: f.norm(-c) for m, c in self._terms.items()})

    def __sub__(self, other: Any) -> "Polynomial":
        return self.__add__(-self._coerce(other))

    def __rsub__(self, other: Any) -> "Polynomial":
        return self._coerce(other).__sub__(self)

    def __mul__(self, other: Any) -> "Polynomial":
        other = self._coerce(other)
        f = self._ring.field
        res: Dict[Monomial, Any] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono.mul(m1, m2)
                res[m] = res.get(m, 0) + c1 * c2
        normed = {m: f.norm(c) for m, c in res.items()}
        return Polynomial(self._ring, {m: c for m, c in normed.items() if c != 0})

    def __rmul__(self, other: Any) -> "Polynomial":
        return self.__mul__(other)

    def __pow__(self, n: int) -> "Polynomial":
        assert_or_throw(
            isinstance(n, int) and n >= 0, ValueError(f"invalid exponent {n}")
        )
        res, base = self._ring.one(), self
        while n > 0:
            if n & 1:
                res = res * base
            base = base * base
            n >>= 1
        return res

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, Polynomial):
            return self._ring == other._ring and self._terms == other._terms
        if isinstance(other, (int, str)) or hasattr(other, "denominator"):
            try:
                return self == self._coerce(other)
            except (TypeError, ValueError):
                return False
        return False

    def __ne__(self, other: Any) -> bool:
        return not self.__eq__(other)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r})"

    def __uuid__(self) -> str:
        return repr(self._ring) + ":" + format_polynomial(self)

    def _coerce(self, other: Any) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return self._ring(other)

    def _check(self, other: "Polynomial") -> None:
        assert_or_throw(
            self._ring == other._ring,
            RingMismatchError(f"{self._ring} != {other._ring}"),
        )


def format_polynomial(p: Polynomial) -> str:
    """Canonical text of a polynomial, e.g. ``x*y^3 - 2/3*z``. Parsing the
    output gives back the same polynomial
    """
    if p.is_zero():
        return "0"
    f = p.ring.field
    names = p.ring.variables
    parts: List[str] = []
    for m, c in p.terms:
        text = f.format(c)
        neg = text.startswith("-")
        if neg:
            text = text[1:]
        factors = [
            names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(m) if e
        ]
        if len(factors) == 0:
            body = text
        elif text == "1":
            body = "*".join(factors)
        else:
            body = text + "*" + "*".join(factors)
        if len(parts) == 0:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)
