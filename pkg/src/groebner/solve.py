"""Zero-dimensional solving in two variables, grouped into Galois orbits.

The lex basis with ``y > x`` is triangular: its last element is the eliminant
in ``x``.  Each irreducible factor of the eliminant is a Galois orbit of
x-coordinates; specialising the basis there and taking the gcd yields the
y-polynomial of the orbit, which is factored over the coordinate field.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ..algebra import univariate as up
from ..algebra.factor import factor_dense, factor_univariate, number_field
from ..algebra.numberfield import NumberField, NumberFieldElement
from ..algebra.polynomial import Coefficient, MultiPoly, format_coefficient, lex
from ..errors import DomainError, UnsupportedFieldError
from .buchberger import groebner_basis
from .ideal import Ideal
from .staircase import quotient_dimension

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AlgebraicPoint:
    """A Galois orbit of points, represented by one conjugate.

    ``field`` is None for rational points; otherwise the coordinates lie in
    ``field`` and the orbit has ``orbit_size`` conjugates.
    """

    field: Optional[NumberField]
    coords: Tuple[Coefficient, ...]
    orbit_size: int = 1

    @property
    def is_rational(self) -> bool:
        return self.field is None

    @property
    def field_label(self) -> str:
        if self.field is None:
            return "rational"
        return up.to_string(self.field.minimal_polynomial, self.field.name)

    def shifts(self, variables: Sequence[str]) -> Dict[str, Coefficient]:
        return dict(zip(variables, self.coords))

    def coordinate_strings(self) -> List[str]:
        return [format_coefficient(c) for c in self.coords]

    def __str__(self) -> str:
        coords = ", ".join(self.coordinate_strings())
        if self.field is None:
            return f"({coords})"
        return f"({coords}) over {self.field}, orbit {self.orbit_size}"


def _specialize_dense(p: MultiPoly, x: str, y: str, value, field: Optional[NumberField]) -> List:
    q = p.specialize({x: value})
    coeffs = q.as_univariate(y) if not q.is_zero else []
    if field is not None:
        return up.trim([field.convert(c) for c in coeffs])
    return up.trim([Fraction(c.as_fraction()) if isinstance(c, NumberFieldElement) else c for c in coeffs])


def _fiber_polynomial(basis: Sequence[MultiPoly], x: str, y: str, value, field) -> List:
    g: List = []
    for p in basis:
        dense = _specialize_dense(p, x, y, value, field)
        if dense:
            g = up.gcd(g, dense) if g else up.monic(dense)
    return up.squarefree_part(g) if len(g) > 1 else g


def solve_zero_dimensional(ideal: Ideal, x: str = "x", y: str = "y") -> List[AlgebraicPoint]:
    """All common zeros of a zero-dimensional ideal in ℚ[x, y], one record per Galois orbit.

    Raises:
        DomainError: if the ideal is not zero-dimensional.
        UnsupportedFieldError: if a y-coordinate needs a second field extension.
    """
    if set(ideal.variables) != {x, y} or len(ideal.variables) != 2:
        raise DomainError(f"solver expects the ring ({x}, {y}), got {ideal.variables}")
    gb = groebner_basis(ideal, lex(ideal.variables, [y, x]))
    if gb.is_unit:
        return []
    if quotient_dimension(gb).infinite:
        raise DomainError("ideal is not zero-dimensional")
    eliminant = next(g for g in gb.basis if g.used_variables() in ((x,), ()))
    points: List[AlgebraicPoint] = []
    for fac, _ in factor_univariate(eliminant):
        dense = fac.as_univariate(x)
        if len(dense) == 2:
            x0 = -dense[0] / dense[1]
            g = _fiber_polynomial(gb.basis, x, y, x0, None)
            for yfac, _ in factor_dense(g):
                if len(yfac) == 2:
                    points.append(AlgebraicPoint(None, _ordered(ideal, x, y, x0, -yfac[0])))
                else:
                    K = number_field(yfac, name="b")
                    points.append(
                        AlgebraicPoint(K, _ordered(ideal, x, y, K.convert(x0), K.generator), K.degree)
                    )
        else:
            K = number_field(dense, name="a")
            alpha = K.generator
            g = _fiber_polynomial(gb.basis, x, y, alpha, K)
            for yfac, _ in factor_dense(g, K):
                if len(yfac) != 2:
                    raise UnsupportedFieldError(
                        f"y-coordinates over {K} need a further extension of degree {len(yfac) - 1}"
                    )
                y0 = K.convert(-yfac[0])
                points.append(AlgebraicPoint(K, _ordered(ideal, x, y, alpha, y0), K.degree))
    points.sort(key=lambda p: (p.orbit_size, p.field_label, p.coordinate_strings()))
    logger.debug("solved %d point orbits from eliminant %s", len(points), eliminant)
    return points


def _ordered(ideal: Ideal, x: str, y: str, xv, yv) -> Tuple:
    values = {x: xv, y: yv}
    return tuple(values[v] for v in ideal.variables)
