# flake8: noqa
from samuel.local.definition import (
    RingDefinition,
    parse_corpus,
    parse_ring_definition,
)
from samuel.local.length import (
    h0_length,
    is_parameter_ideal,
    local_colength,
    subquotient_length,
)
from samuel.local.ring import PresentedLocalRing, QuotientIdeal, RingElement
