"""Exact arithmetic: rationals, sparse polynomials, number fields and factorization."""

from .expression import parse_polynomial
from .factor import (
    factor_dense,
    factor_over_number_field,
    factor_rational,
    factor_univariate,
    is_squarefree,
    number_field,
    squarefree_part,
)
from .numberfield import NumberField, NumberFieldElement, extfield_reduce
from .polynomial import MonomialOrder, MultiPoly, grevlex, lex, polynomial_ring, weighted_grevlex
from .resultant import resultant, resultant_with_caveat

__all__ = [
    "MonomialOrder",
    "MultiPoly",
    "NumberField",
    "NumberFieldElement",
    "extfield_reduce",
    "factor_dense",
    "factor_over_number_field",
    "factor_rational",
    "factor_univariate",
    "grevlex",
    "is_squarefree",
    "lex",
    "number_field",
    "parse_polynomial",
    "polynomial_ring",
    "resultant",
    "resultant_with_caveat",
    "squarefree_part",
    "weighted_grevlex",
]
