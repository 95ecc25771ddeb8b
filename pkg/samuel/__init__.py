# flake8: noqa
from samuel_version import __version__

from samuel.collections import FileSystem, ParamDict
from samuel.core import QQ, PolyRing, Polynomial, PrimeField, parse_field
from samuel.groebner import IdealHandle, groebner_basis
from samuel.hilbert import (
    fit_coefficients,
    graded_series,
    hilbert_samuel_table,
    reduction_number,
    vv_depth_bound,
    vv_depth_certificate,
)
from samuel.local import (
    PresentedLocalRing,
    QuotientIdeal,
    RingElement,
    local_colength,
    parse_ring_definition,
)
from samuel.sequences import (
    is_d_sequence,
    is_regular_sequence,
    is_superficial,
    superficial_sequence_search,
)
from samuel.utils import assert_arg_not_none, assert_or_throw, to_uuid
