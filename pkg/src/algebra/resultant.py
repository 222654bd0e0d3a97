"""Sylvester resultants with a fraction-free (Bareiss) determinant."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List

from ..errors import DomainError
from .polynomial import MultiPoly

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ResultantResult:
    value: MultiPoly
    # both leading coefficients in the eliminated variable are nonconstant, so
    # the projection may miss common zeros escaping to infinity
    leading_coefficient_caveat: bool


def sylvester_matrix(f: MultiPoly, g: MultiPoly, var: str) -> List[List[MultiPoly]]:
    """Sylvester matrix of ``f`` and ``g`` as polynomials in ``var``."""
    a = list(reversed(f.univariate_coeffs(var)))
    b = list(reversed(g.univariate_coeffs(var)))
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    zero = MultiPoly.zero(f.variables)
    rows: List[List[MultiPoly]] = []
    for i in range(n):
        rows.append([zero] * i + a + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + b + [zero] * (size - n - 1 - i))
    return rows


def bareiss_determinant(matrix: List[List[MultiPoly]], ring) -> MultiPoly:
    """Determinant by Bareiss' fraction-free elimination; every division is exact."""
    n = len(matrix)
    if n == 0:
        return MultiPoly.constant(ring, 1)
    M = [list(row) for row in matrix]
    sign = 1
    prev = MultiPoly.constant(ring, 1)
    for k in range(n - 1):
        if M[k][k].is_zero:
            pivot = next((i for i in range(k + 1, n) if not M[i][k].is_zero), None)
            if pivot is None:
                return MultiPoly.zero(ring)
            M[k], M[pivot] = M[pivot], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]).exact_div(prev)
        prev = M[k][k]
    det = M[n - 1][n - 1]
    return det if sign > 0 else -det


def resultant_with_caveat(f: MultiPoly, g: MultiPoly, var: str) -> ResultantResult:
    """Resultant of ``f`` and ``g`` with respect to ``var`` plus the leading-coefficient flag.

    The value lives in the ring of the remaining variables.

    Raises:
        DomainError: if either input is zero or ``var`` is not a ring variable.
    """
    if f.is_zero or g.is_zero:
        raise DomainError("resultant of a zero polynomial")
    if f.variables != g.variables:
        raise DomainError(f"ring mismatch: {f.variables} vs {g.variables}")
    if var not in f.variables:
        raise DomainError(f"variable {var!r} not in ring {f.variables}")
    rows = sylvester_matrix(f, g, var)
    det = bareiss_determinant(rows, f.variables)
    remaining = tuple(v for v in f.variables if v != var)
    lc_f = f.univariate_coeffs(var)[-1]
    lc_g = g.univariate_coeffs(var)[-1]
    caveat = not lc_f.is_constant and not lc_g.is_constant
    logger.debug("resultant in %s of size %d, caveat=%s", var, len(rows), caveat)
    return ResultantResult(det.with_variables(remaining), caveat)


def resultant(f: MultiPoly, g: MultiPoly, var: str) -> MultiPoly:
    """Sylvester resultant of ``f`` and ``g`` in ``var``, a polynomial in the remaining variables.

    The Sylvester rows of ``f`` come first, so the sign follows
    ``Res(f, g) = lc(f)^deg(g) · Π g(roots of f)``: ``Res_y(y² − x³, 2y) = −4x³``.
    The result always lies in the ideal ``(f, g)``.
    """
    return resultant_with_caveat(f, g, var).value
