"""Singular points of a reduced plane curve."""

from __future__ import annotations

import logging
from typing import List

from ..algebra.factor import is_squarefree
from ..algebra.polynomial import MultiPoly
from ..errors import CurveNotReducedError, DomainError
from ..groebner.ideal import Ideal
from ..groebner.solve import AlgebraicPoint, solve_zero_dimensional

logger = logging.getLogger(__name__)


def require_plane(f: MultiPoly) -> tuple:
    if f.nvars != 2:
        raise DomainError(f"plane curve expected, got ring {f.variables}")
    if f.is_constant:
        raise DomainError("a constant polynomial does not define a curve")
    return f.variables


def require_reduced(f: MultiPoly) -> None:
    if not is_squarefree(f):
        raise CurveNotReducedError(f"{f} is not squarefree")


def singular_points(f: MultiPoly) -> List[AlgebraicPoint]:
    """Common zeros of ``(f, f_x, f_y)`` as Galois orbits.

    Raises:
        CurveNotReducedError: if ``f`` is not squarefree.
        UnsupportedFieldError: if a point needs a tower of extensions.
    """
    x, y = require_plane(f)
    require_reduced(f)
    ideal = Ideal([f, f.derivative(x), f.derivative(y)])
    points = solve_zero_dimensional(ideal, x, y)
    logger.debug("%s: %d singular point orbits", f, len(points))
    return points


__all__ = ["AlgebraicPoint", "require_plane", "require_reduced", "singular_points"]
