# flake8: noqa
from samuel.core.field import QQ, Field, PrimeField, RationalField, parse_field
from samuel.core.monomial import (
    DEGREVLEX,
    LEX,
    Monomial,
    MonomialOrder,
    elimination_order,
)
from samuel.core.parser import parse_polynomial
from samuel.core.polynomial import PolyRing, Polynomial
