"""Geometric genus of an absolutely irreducible plane curve."""

from __future__ import annotations

import logging
from typing import List, Optional, Sequence

from ..algebra.polynomial import MultiPoly
from ..errors import NotAbsolutelyIrreducibleError
from ..singular.census import SingularityRecord, singularity_census
from .curve import CurveSpec
from .infinity import InfinityPoint, projective_data

logger = logging.getLogger(__name__)


def genus_from_data(
    degree: int,
    finite: Sequence[SingularityRecord],
    at_infinity: Sequence[InfinityPoint],
    component: int = 0,
) -> int:
    """``(d-1)(d-2)/2`` minus the orbit-weighted deltas of the projective closure.

    Raises:
        NotAbsolutelyIrreducibleError: if the result is negative.
    """
    arithmetic = (degree - 1) * (degree - 2) // 2
    finite_delta = sum(r.orbit_size * r.delta for r in finite)
    infinite_delta = sum(p.orbit_size * p.deltas.get(component, 0) for p in at_infinity)
    g = arithmetic - finite_delta - infinite_delta
    if g < 0:
        raise NotAbsolutelyIrreducibleError(
            f"genus formula gives {g} (degree {degree}, delta {finite_delta} + {infinite_delta})"
        )
    return g


def component_genus(
    factor: MultiPoly,
    census: Optional[List[SingularityRecord]] = None,
    at_infinity: Optional[List[InfinityPoint]] = None,
    component: int = 0,
) -> int:
    """Geometric genus of the closure of ``factor = 0``.

    ``census`` and ``at_infinity`` may be passed in when already computed;
    ``component`` is then the index of ``factor`` in the points' component maps.
    """
    if census is None:
        census = singularity_census(factor)
    if at_infinity is None:
        at_infinity = projective_data(CurveSpec(factor.variables, (factor,)))
        component = 0
    g = genus_from_data(factor.total_degree, census, at_infinity, component)
    logger.debug("genus of %s: %d", factor, g)
    return g
