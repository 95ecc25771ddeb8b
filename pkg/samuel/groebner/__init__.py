# flake8: noqa
from samuel.groebner.buchberger import groebner_basis, reduce
from samuel.groebner.ideal import (
    IdealHandle,
    colength,
    count_standard_monomials,
    elimination,
    ideal_colon,
    ideal_colon_ideal,
    ideal_equal,
    ideal_intersection,
    ideal_power,
    ideal_product,
    ideal_sum,
    is_zero_dimensional,
    krull_dimension,
    membership,
    saturation,
)
