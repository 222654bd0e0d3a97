"""Per-orbit singularity records."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List

from ..algebra.polynomial import MultiPoly
from ..errors import CriticalLocusNotFiniteError, InconsistentSingularityDataError
from ..groebner.solve import AlgebraicPoint
from .milnor import delta_invariant, local_milnor, total_milnor_on_curve
from .points import singular_points
from .puiseux import branch_count

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SingularityRecord:
    """One singular point (Galois orbit representative) with its local invariants."""

    point: AlgebraicPoint
    mu: int
    branches: int
    delta: int
    mu_prime: int

    def __post_init__(self) -> None:
        if self.delta != delta_invariant(self.mu, self.branches):
            raise InconsistentSingularityDataError(
                f"delta={self.delta} does not match mu={self.mu}, r={self.branches}"
            )

    @property
    def orbit_size(self) -> int:
        return self.point.orbit_size


def singularity_record(f: MultiPoly, p: AlgebraicPoint) -> SingularityRecord:
    mu = local_milnor(f, p)
    r = branch_count(f, p)
    # plane-curve germs are complete intersections, so mu' = mu
    return SingularityRecord(p, mu, r, delta_invariant(mu, r), mu)


def singularity_census(f: MultiPoly, cross_check: bool = True) -> List[SingularityRecord]:
    """Records for every singular orbit of ``f = 0``.

    With ``cross_check`` the orbit-weighted local Milnor numbers are compared
    with the global ``f^N`` computation.
    """
    records = [singularity_record(f, p) for p in singular_points(f)]
    local_sum = sum(r.orbit_size * r.mu for r in records)
    if cross_check:
        try:
            total = total_milnor_on_curve(f)
        except CriticalLocusNotFiniteError:
            # critical curves of f lie off a reduced curve; the global count needs a finite locus
            logger.debug("skipping global Milnor cross-check for %s: critical locus not finite", f)
            total = local_sum
        if local_sum != total:
            raise InconsistentSingularityDataError(
                f"orbit-weighted local Milnor sum {local_sum} != global total {total} for {f}"
            )
    logger.info("%s: %d singular orbits, total mu %d", f, len(records), local_sum)
    return records
