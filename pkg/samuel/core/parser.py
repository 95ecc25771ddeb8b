import re
from fractions import Fraction
from typing import List, Tuple

from samuel.core.polynomial import PolyRing, Polynomial
from samuel.exceptions import ParseError

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>\*\*|[-+*/^()]))"
)


def tokenize(text: str) -> List[Tuple[str, str, int]]:
    """Split polynomial text into ``(kind, value, column)`` tokens, kind is one
    of ``num``, ``name``, ``op``

    :raises ParseError: on any character outside the grammar
    """
    tokens: List[Tuple[str, str, int]] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[col]!r}", column=col)
        kind = m.lastgroup
        assert kind is not None
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return tokens


def parse_polynomial(ring: PolyRing, text: str) -> Polynomial:
    """Parse polynomial text over ``ring``. Grammar: terms joined by ``+``/``-``,
    ``*`` for products, ``^`` or ``**`` for nonnegative integer powers,
    parentheses, integer or ``a/b`` coefficients; division is only allowed by
    nonzero constants

    :param ring: the ambient ring, names must be its variables
    :param text: polynomial text, e.g. ``x*y^3 - 2/3*z``
    :raises ParseError: with the column of the offending token
    :return: the canonical polynomial

    :Examples:
    >>> R = PolyRing(["x", "y"])
    >>> assert str(parse_polynomial(R, "(x+y)^2")) == "x^2 + 2*x*y + y^2"
    """
    if text is None or text.strip() == "":
        raise ParseError("empty polynomial")
    return _Parser(ring, text).parse()


class _Parser(object):
    def __init__(self, ring: PolyRing, text: str):
        self._ring = ring
        self._text = text
        self._tokens = tokenize(text)
        self._pos = 0

    def parse(self) -> Polynomial:
        res = self._expr()
        if self._pos < len(self._tokens):
            _, value, col = self._tokens[self._pos]
            raise ParseError(f"unexpected {value!r}", column=col)
        return res

    def _peek(self) -> Tuple[str, str, int]:
        if self._pos < len(self._tokens):
            return self._tokens[self._pos]
        return ("end", "", len(self._text))

    def _next(self) -> Tuple[str, str, int]:
        tok = self._peek()
        self._pos += 1
        return tok

    def _accept(self, *ops: str) -> bool:
        kind, value, _ = self._peek()
        if kind == "op" and value in ops:
            self._pos += 1
            return True
        return False

    def _expr(self) -> Polynomial:
        res = self._term()
        while True:
            kind, value, _ = self._peek()
            if kind != "op" or value not in ["+", "-"]:
                return res
            self._pos += 1
            rhs = self._term()
            res = res + rhs if value == "+" else res - rhs

    def _term(self) -> Polynomial:
        res = self._unary()
        while True:
            kind, value, col = self._peek()
            if kind != "op" or value not in ["*", "/"]:
                return res
            self._pos += 1
            rhs = self._unary()
            if value == "*":
                res = res * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    raise ParseError(
                        "division is only allowed by nonzero constants", column=col
                    )
                res = res.scale(self._ring.field.inv(rhs.constant_coeff()))

    def _unary(self) -> Polynomial:
        if self._accept("-"):
            return -self._unary()
        if self._accept("+"):
            return self._unary()
        return self._power()

    def _power(self) -> Polynomial:
        base = self._atom()
        if self._accept("^", "**"):
            kind, value, col = self._next()
            if kind != "num":
                raise ParseError("exponent must be a nonnegative integer", column=col)
            return base ** int(value)
        return base

    def _atom(self) -> Polynomial:
        kind, value, col = self._next()
        if kind == "num":
            return self._ring.constant(Fraction(int(value)))
        if kind == "name":
            if value not in self._ring.variables:
                raise ParseError(f"unknown variable {value!r}", column=col)
            return self._ring.gen(value)
        if kind == "op" and value == "(":
            res = self._expr()
            k, v, c = self._next()
            if k != "op" or v != ")":
                raise ParseError("missing ')'", column=c)
            return res
        if kind == "end":
            raise ParseError("unexpected end of text", column=col)
        raise ParseError(f"unexpected {value!r}", column=col)
