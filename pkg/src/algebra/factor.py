"""Factorization over ℚ and over simple number fields ℚ(α).

Univariate factorization over ℚ is delegated to sympy (Zassenhaus with Hensel
lifting).  Factorization over ℚ(α) uses Trager's norm method on top of it:
shift until the norm is squarefree, factor the norm over ℚ and recover the
factors by gcds over ℚ(α).
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..config import FACTOR_DEGREE_CAP
from ..errors import DomainError
from . import univariate as up
from .numberfield import NumberField, NumberFieldElement
from .polynomial import MultiPoly
from .resultant import resultant
from .sympy_bridge import dense_from_sympy, dense_to_sympy, from_sympy, gcd, to_sympy

logger = logging.getLogger(__name__)

DenseFactor = Tuple[List, int]


def _check_cap(deg: int) -> None:
    if deg > FACTOR_DEGREE_CAP:
        raise DomainError(f"degree {deg} exceeds the factorization cap {FACTOR_DEGREE_CAP}")


def _factor_key(item: DenseFactor) -> tuple:
    coeffs, k = item
    return (len(coeffs), k, up.to_string(coeffs))


def factor_dense_rational(coeffs: Sequence[Fraction]) -> List[DenseFactor]:
    """Monic irreducible factors over ℚ of a dense univariate polynomial."""
    coeffs = up.trim([c.as_fraction() if isinstance(c, NumberFieldElement) else Fraction(c) for c in coeffs])
    if not coeffs:
        raise DomainError("cannot factor the zero polynomial")
    _check_cap(len(coeffs) - 1)
    if len(coeffs) == 1:
        return []
    _, factors = dense_to_sympy(coeffs).factor_list()
    out = [(up.monic(dense_from_sympy(p)), int(k)) for p, k in factors]
    return sorted(out, key=_factor_key)


def factor_univariate(f: MultiPoly) -> List[Tuple[MultiPoly, int]]:
    """Irreducible monic factors of a univariate rational polynomial with multiplicities.

    The product of the factors equals ``f`` up to a rational constant.

    Raises:
        DomainError: for zero, multivariate or over-cap input.
    """
    if f.is_zero:
        raise DomainError("cannot factor the zero polynomial")
    used = f.used_variables()
    if len(used) > 1:
        raise DomainError(f"{f} is not univariate")
    if not used:
        return []
    name = used[0]
    return [
        (MultiPoly.from_univariate(f.variables, name, coeffs), k)
        for coeffs, k in factor_dense_rational(f.as_univariate(name))
    ]


def factor_rational(f: MultiPoly) -> List[Tuple[MultiPoly, int]]:
    """Irreducible factors over ℚ of a multivariate polynomial (normalized, sorted)."""
    if f.is_zero:
        raise DomainError("cannot factor the zero polynomial")
    _, factors = to_sympy(f).factor_list()
    out = [(from_sympy(p, f.variables).normalized(), int(k)) for p, k in factors]
    return sorted(out, key=lambda t: (t[0].total_degree, str(t[0])))


def squarefree_part(f: MultiPoly) -> MultiPoly:
    """``f / gcd(f, ∂f/∂x₁, …)`` with content 1 and positive leading coefficient."""
    if f.is_zero:
        raise DomainError("squarefree part of the zero polynomial")
    g = f
    for v in f.variables:
        d = f.derivative(v)
        if not d.is_zero:
            g = gcd(g, d)
    return f.exact_div(g).normalized()


def is_squarefree(f: MultiPoly) -> bool:
    return squarefree_part(f) == f.normalized()


def number_field(minimal_polynomial: Sequence, name: str = "a") -> NumberField:
    """Validated ℚ(α): the minimal polynomial must be monic and irreducible over ℚ."""
    coeffs = up.monic([Fraction(c) for c in minimal_polynomial])
    factors = factor_dense_rational(coeffs)
    if len(factors) != 1 or factors[0][1] != 1:
        raise DomainError(f"{up.to_string(coeffs, name)} is not irreducible over Q")
    return NumberField(tuple(coeffs), name)


# ---------------------------------------------------------------------------
# Trager
# ---------------------------------------------------------------------------

def _norm(g: Sequence, field: NumberField) -> List[Fraction]:
    """Norm Res_t(m(t), G(t, z)) of a polynomial with ℚ(α) coefficients."""
    ring = ("t", "z")
    terms = {}
    for k, c in enumerate(g):
        c = field.convert(c)
        for j, a in enumerate(c.coeffs):
            terms[(j, k)] = a
    lifted = MultiPoly(ring, terms)
    m = MultiPoly.from_univariate(ring, "t", field.minimal_polynomial)
    return [c for c in resultant(m, lifted, "t").as_univariate("z")]


def _factor_squarefree(g: List, field: NumberField) -> List[List]:
    alpha = field.generator
    for s in range(0, 16):
        shift = alpha * (-s)
        shifted = [field.convert(c) for c in up.shift(g, shift)] if s else g
        norm = _norm(shifted, field)
        if up.degree(up.gcd(norm, up.derivative(norm))) > 0:
            continue
        logger.debug("norm squarefree after shift s=%d", s)
        factors: List[List] = []
        for nf, _ in factor_dense_rational(norm):
            h = up.gcd(shifted, [field.convert(c) for c in nf])
            if up.degree(h) > 0:
                factors.append(up.monic([field.convert(c) for c in up.shift(h, -shift)]))
        return factors
    raise DomainError("no squarefree norm found for Trager factorization")


def factor_over_number_field(
    coeffs: Sequence, field: Optional[NumberField] = None
) -> List[DenseFactor]:
    """Monic irreducible factors with multiplicities of a univariate polynomial over ℚ(α).

    With ``field`` None the coefficients must be rational and the result is the
    factorization over ℚ.
    """
    coeffs = up.trim(list(coeffs))
    if not coeffs:
        raise DomainError("cannot factor the zero polynomial")
    if field is None or field.degree == 1:
        return factor_dense_rational(coeffs)
    _check_cap((len(coeffs) - 1) * field.degree)
    K = [field.convert(c) for c in coeffs]
    out: List[DenseFactor] = []
    for part, k in up.squarefree_decomposition(K):
        if up.degree(part) == 1:
            out.append((up.monic(part), k))
            continue
        for fac in _factor_squarefree(part, field):
            out.append((fac, k))
    return sorted(out, key=_factor_key)


def factor_dense(coeffs: Sequence, field: Optional[NumberField] = None) -> List[DenseFactor]:
    """Factor over ℚ when all coefficients are rational, else over ``field``."""
    if field is None:
        for c in coeffs:
            if isinstance(c, NumberFieldElement) and not c.is_rational:
                field = c.field
                break
    return factor_over_number_field(coeffs, field)


__all__ = [
    "factor_univariate",
    "factor_rational",
    "factor_dense",
    "factor_dense_rational",
    "factor_over_number_field",
    "squarefree_part",
    "is_squarefree",
    "number_field",
]
