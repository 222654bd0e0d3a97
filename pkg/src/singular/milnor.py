"""Local and global Milnor numbers and the delta invariant.

Local dimensions are computed without local orders: the colength of
``(f_x, f_y) + m^N`` at the origin grows with N and stops exactly when
``m^N`` already lies in the Jacobian ideal of the germ.
"""

from __future__ import annotations

import logging
from typing import List, Optional

from ..algebra.polynomial import MultiPoly
from ..config import MILNOR_TRUNCATION_LIMIT
from ..errors import (
    CriticalLocusNotFiniteError,
    DomainError,
    InconsistentSingularityDataError,
    NonIsolatedSingularityError,
)
from ..groebner.buchberger import groebner_basis, normal_form
from ..groebner.ideal import Ideal
from ..groebner.solve import AlgebraicPoint
from ..groebner.staircase import monomials_of_weighted_degree, quotient_dimension
from .points import require_plane, require_reduced

logger = logging.getLogger(__name__)


def maximal_ideal_power(variables, n: int) -> List[MultiPoly]:
    """Monomial generators of ``m^n`` at the origin."""
    return [MultiPoly(variables, {m: 1}) for m in monomials_of_weighted_degree([1] * len(variables), n)]


def truncated_colength(generators: List[MultiPoly], n: int) -> int:
    """``dim K[x]/(generators + m^n)``; always finite."""
    variables = generators[0].variables
    gb = groebner_basis(Ideal(list(generators) + maximal_ideal_power(variables, n), variables))
    return quotient_dimension(gb).dimension


def local_colength(generators: List[MultiPoly], limit: Optional[int] = None) -> int:
    """Colength at the origin of the ideal generated by ``generators``.

    Raises:
        NonIsolatedSingularityError: if the truncated colengths have not settled by ``limit``.
    """
    limit = MILNOR_TRUNCATION_LIMIT if limit is None else limit
    previous = 0
    for n in range(1, limit + 1):
        current = truncated_colength(generators, n)
        if current == previous and n > current:
            return current
        previous = current
    raise NonIsolatedSingularityError(
        f"local colength still growing at truncation order {limit}"
    )


def local_milnor(f: MultiPoly, p: AlgebraicPoint) -> int:
    """Milnor number of the curve ``f = 0`` at ``p``.

    Args:
        f: Plane curve polynomial.
        p: A point of the curve (one representative of its Galois orbit).

    Returns:
        ``dim`` of the local algebra of ``(f_x, f_y)`` at ``p``.
    """
    x, y = require_plane(f)
    g = f.translate(p.shifts(f.variables))
    if g.constant_term():
        raise DomainError(f"point {p} does not lie on {f}")
    mu = local_colength([g.derivative(x), g.derivative(y)])
    logger.debug("local Milnor number of %s at %s: %d", f, p, mu)
    return mu


def total_milnor(f: MultiPoly) -> int:
    """``dim ℚ[x,y]/(f_x, f_y)``: the sum of Milnor numbers over all critical points.

    Raises:
        CriticalLocusNotFiniteError: when the critical locus has positive dimension.
    """
    x, y = require_plane(f)
    gb = groebner_basis(Ideal([f.derivative(x), f.derivative(y)], f.variables))
    dim = quotient_dimension(gb).dimension
    if dim is None:
        raise CriticalLocusNotFiniteError(f"(f_x, f_y) is not zero-dimensional for {f}")
    return dim


def total_milnor_on_curve(f: MultiPoly) -> int:
    """Sum of Milnor numbers over the singular points of the curve ``f = 0``.

    Computed globally as ``dim ℚ[x,y]/(f_x, f_y, f^N)`` with ``N`` the global
    critical dimension: ``f`` is a unit at critical points off the curve and
    nilpotent in every local factor on it.
    """
    x, y = require_plane(f)
    require_reduced(f)
    jac = [f.derivative(x), f.derivative(y)]
    gb = groebner_basis(Ideal(jac, f.variables))
    n = quotient_dimension(gb).dimension
    if n is None:
        raise CriticalLocusNotFiniteError(f"(f_x, f_y) is not zero-dimensional for {f}")
    if n == 0:
        return 0
    reduced_f = normal_form(f, gb)
    power = MultiPoly.constant(f.variables, 1)
    for _ in range(n):
        power = normal_form(power * reduced_f, gb)
    dim = quotient_dimension(groebner_basis(Ideal(jac + [power], f.variables))).dimension
    logger.debug("total Milnor number on %s: %d (critical dimension %d)", f, dim, n)
    return dim


def delta_invariant(mu: int, r: int) -> int:
    """``δ = (μ + r − 1)/2``.

    Raises:
        InconsistentSingularityDataError: on a parity or sign violation.
    """
    if r < 1 or mu < 0 or (mu - r + 1) % 2 or mu - r + 1 < 0:
        raise InconsistentSingularityDataError(f"mu={mu}, r={r} violate mu - r + 1 even and >= 0")
    return (mu + r - 1) // 2
