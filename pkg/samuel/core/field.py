import logging
from fractions import Fraction
from typing import Any

from samuel.constants import SAMUEL_DEFAULT_PRIME
from samuel.utils.assertion import assert_or_throw

_LOG = logging.getLogger(__name__)


class Field(object):
    """Exact coefficient field. Field elements are plain python values
    (``Fraction`` for the rationals, ``int`` in ``[0, p)`` for prime fields)
    so polynomial kernels can use native arithmetic, the field only supplies
    normalization, inversion, parsing and printing.
    """

    @property
    def zero(self) -> Any:  # pragma: no cover
        raise NotImplementedError

    @property
    def one(self) -> Any:  # pragma: no cover
        raise NotImplementedError

    @property
    def characteristic(self) -> int:  # pragma: no cover
        raise NotImplementedError

    def convert(self, value: Any) -> Any:  # pragma: no cover
        """Convert ints, Fractions or numeric strings into a canonical element"""
        raise NotImplementedError

    def norm(self, value: Any) -> Any:  # pragma: no cover
        """Canonicalize the result of native arithmetic on elements"""
        raise NotImplementedError

    def inv(self, value: Any) -> Any:  # pragma: no cover
        raise NotImplementedError

    def div(self, a: Any, b: Any) -> Any:
        return self.norm(a * self.inv(b))

    def format(self, value: Any) -> str:
        return str(value)

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, Field) and repr(self) == repr(other)

    def __hash__(self) -> int:
        return hash(repr(self))

    def __uuid__(self) -> str:
        return repr(self)


class RationalField(Field):
    """The rational numbers with arbitrary precision, elements are always
    ``Fraction`` in lowest terms with positive denominator
    """

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    @property
    def characteristic(self) -> int:
        return 0

    def convert(self, value: Any) -> Fraction:
        assert_or_throw(
            not isinstance(value, (float, bool)),
            TypeError(f"{value} is not an exact scalar"),
        )
        if isinstance(value, str):
            value = value.strip()
        return Fraction(value)

    def norm(self, value: Any) -> Any:
        return value

    def inv(self, value: Any) -> Fraction:
        assert_or_throw(value != 0, ZeroDivisionError("can't invert zero"))
        return 1 / Fraction(value)

    def __repr__(self) -> str:
        return "QQ"

    def __str__(self) -> str:
        return "Q"


class PrimeField(Field):
    """The field with ``p`` elements, elements are ints in ``[0, p)``

    :param p: a prime, at least 32003 is recommended so random linear
        combinations stay generic
    """

    def __init__(self, p: int):
        assert_or_throw(
            isinstance(p, int) and _is_prime(p), ValueError(f"{p} is not a prime")
        )
        if p < SAMUEL_DEFAULT_PRIME:
            _LOG.warning(
                "prime field F_%s is small, superficial element searches "
                "may fail more often",
                p,
            )
        self._p = p

    @property
    def p(self) -> int:
        return self._p

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    @property
    def characteristic(self) -> int:
        return self._p

    def convert(self, value: Any) -> int:
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, Fraction):
            assert_or_throw(
                value.denominator % self._p != 0,
                ZeroDivisionError(f"{value} has no image in F_{self._p}"),
            )
            return value.numerator * pow(value.denominator, -1, self._p) % self._p
        assert_or_throw(
            isinstance(value, int) and not isinstance(value, bool),
            TypeError(f"{value} is not an exact scalar"),
        )
        return value % self._p

    def norm(self, value: Any) -> int:
        return value % self._p

    def inv(self, value: Any) -> int:
        assert_or_throw(value % self._p != 0, ZeroDivisionError("can't invert zero"))
        return pow(value, -1, self._p)

    def format(self, value: Any) -> str:
        # symmetric representatives read better: p-1 prints as -1
        v = value % self._p
        return str(v - self._p) if v > self._p // 2 else str(v)

    def __repr__(self) -> str:
        return f"GF({self._p})"

    def __str__(self) -> str:
        return f"Fp {self._p}"


QQ = RationalField()


def parse_field(expr: str) -> Field:
    """Parse a field expression. Accepted forms: ``q``, ``Q``, ``QQ``,
    ``fp:P``, ``Fp P``, ``GF(P)``

    :param expr: field expression
    :raises ValueError: if the expression is invalid
    :return: the field
    """
    s = expr.strip()
    if s.lower() in ["q", "qq"]:
        return QQ
    low = s.lower().replace(" ", "")
    for prefix in ["fp:", "fp", "gf(", "gf"]:
        if low.startswith(prefix):
            digits = low[len(prefix) :].rstrip(")")
            if digits.isdigit():
                return PrimeField(int(digits))
    raise ValueError(f"{expr} is not a valid field expression")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True
