"""The surface ``X = Spec ℚ[x, xy, y², y³] ⊂ ℂ⁴`` with ``f = u``.

``X`` is cut out by ``u²w₁ − v², u³w₂ − v³, w₁³ − w₂²`` and is not a local
complete intersection.  Every fiber ``u = y ≠ 0`` is a line, while the reduced
fiber over 0 is the cusp ``w₁³ = w₂²``, whose local μ′ exceeds ``h_f = 0``.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from typing import List

from ..algebra.polynomial import MultiPoly, lex, polynomial_ring
from ..errors import InconsistentSingularityDataError
from ..groebner.buchberger import groebner_basis
from ..groebner.elimination import eliminate
from ..groebner.ideal import Ideal
from ..groebner.solve import AlgebraicPoint
from ..oracle.presentation import AlgebraPresentation
from ..oracle.truncated import truncated_mu_prime
from ..singular.milnor import local_milnor
from ..topology.betti import betti_numbers
from ..topology.curve import CurveSpec
from .spec import SECTION6, FamilySpec, FiberRecord

logger = logging.getLogger(__name__)

SURFACE_VARIABLES = ("u", "v", "w1", "w2")
CUSP_WEIGHTS = (2, 3)
GERM_DEGREE_BOUND = 20


def surface_equations() -> List[MultiPoly]:
    u, v, w1, w2 = polynomial_ring(SURFACE_VARIABLES)
    return [u**2 * w1 - v**2, u**3 * w2 - v**3, w1**3 - w2**2]


@lru_cache(maxsize=1)
def surface_ideal() -> Ideal:
    """Kernel of ``(u, v, w₁, w₂) ↦ (x, xy, y², y³)``, by eliminating ``x, y``."""
    ring = ("x", "y") + SURFACE_VARIABLES
    x, y, u, v, w1, w2 = polynomial_ring(ring)
    graph = Ideal([u - x, v - x * y, w1 - y**2, w2 - y**3], ring)
    ideal = eliminate(graph, SURFACE_VARIABLES)
    missing = [str(e) for e in surface_equations() if not ideal.contains(e)]
    if missing:
        raise InconsistentSingularityDataError(f"surface equations {missing} not in the toric ideal")
    return ideal


def section6_family() -> FamilySpec:
    u = MultiPoly.variable(SURFACE_VARIABLES, "u")
    return FamilySpec(SECTION6, u, lci=False, name="section6")


def _line_fiber(y: Fraction) -> FiberRecord:
    """Certify that the fiber is the graph ``w₁ = v²/y², w₂ = v³/y³`` over the v-line."""
    u, v, w1, w2 = polynomial_ring(SURFACE_VARIABLES)
    order = lex(SURFACE_VARIABLES, ["u", "w1", "w2", "v"])
    gb = groebner_basis(surface_ideal().extend([u - y]), order)
    expected = {u - y, w1 - v**2 / y**2, w2 - v**3 / y**3}
    if set(gb.basis) != expected:
        raise InconsistentSingularityDataError(f"fiber u = {y} is not a graph over v: {list(gb.basis)}")
    return FiberRecord(y, reduced=True, finite_singular=True, h1=0, b1=0, sum_mu_prime=0)


def _cusp_fiber() -> FiberRecord:
    """The reduced fiber over 0: ``u = v = 0, w₁³ = w₂²``."""
    u, v, w1, w2 = polynomial_ring(SURFACE_VARIABLES)
    cusp = w1**3 - w2**2
    fiber = surface_ideal().extend([u])
    if not fiber.contains(v**2) or fiber.contains(v):
        raise InconsistentSingularityDataError("scheme fiber over 0 should carry the nilpotent v")
    reduced = Ideal([u, v, cusp], SURFACE_VARIABLES)
    if any(not reduced.contains(g) for g in fiber):
        raise InconsistentSingularityDataError("reduced fiber does not contain the scheme fiber")

    plane = cusp.with_variables(("w1", "w2"))
    b1 = betti_numbers(CurveSpec(("w1", "w2"), (plane,))).b1
    germ = AlgebraPresentation.build(("w1", "w2"), [plane], CUSP_WEIGHTS)
    mu_prime = truncated_mu_prime(germ, GERM_DEGREE_BOUND)
    mu = local_milnor(plane, AlgebraicPoint(None, (0, 0)))
    if not mu_prime.stabilized or mu_prime.value != mu:
        raise InconsistentSingularityDataError(f"cusp germ: oracle mu' {mu_prime.value}, Milnor number {mu}")
    # the fiber meets Sing(f) only at the origin
    return FiberRecord(Fraction(0), True, True, b1 + mu_prime.value, b1, mu_prime.value)


def section6_fiber(y) -> FiberRecord:
    """``h¹`` of the fiber ``u = y`` of the surface."""
    y = Fraction(y)
    record = _cusp_fiber() if y == 0 else _line_fiber(y)
    logger.info("section6 fiber at %s: h1 = %d", y, record.h1)
    return record
