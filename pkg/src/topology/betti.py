"""Euler characteristic and Betti numbers of affine plane curves.

The normalization of component ``i`` is a compact surface of genus ``g_i``
punctured at its ``n_i`` places at infinity, so ``χ = Σ (2 - 2 g_i - n_i)``
minus ``r_p - 1`` for every finite point where ``r_p`` branches are glued.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from ..errors import InconsistentSingularityDataError
from ..groebner.ideal import Ideal
from ..groebner.solve import AlgebraicPoint
from ..singular.census import SingularityRecord, singularity_census
from .curve import CurveSpec, certify_absolutely_irreducible
from .genus import genus_from_data
from .infinity import InfinityPoint, projective_data, punctures

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ComponentTopology:
    degree: int
    genus: int
    punctures: int
    smooth: bool
    certified: bool


@dataclass(frozen=True)
class IncidencePoint:
    point: AlgebraicPoint
    branches: int


@dataclass
class TopologyReport:
    b0: int
    b1: int
    chi: int
    components: List[ComponentTopology]
    incidence: List[IncidencePoint]
    infinity: List[InfinityPoint] = field(default_factory=list)


@dataclass
class _CurveData:
    spec: CurveSpec
    census: List[SingularityRecord]
    component_census: List[List[SingularityRecord]]
    infinity: List[InfinityPoint]
    components: List[ComponentTopology]


def _collect(spec: CurveSpec, census: Optional[List[SingularityRecord]] = None) -> _CurveData:
    spec = spec.irreducible_components()
    census = singularity_census(spec.product) if census is None else census
    at_infinity = projective_data(spec)
    component_census: List[List[SingularityRecord]] = []
    components: List[ComponentTopology] = []
    for idx, factor in enumerate(spec.factors):
        records = census if len(spec.factors) == 1 else singularity_census(factor)
        component_census.append(records)
        genus = genus_from_data(factor.total_degree, records, at_infinity, idx)
        n = punctures(at_infinity, idx)
        if n < 1:
            raise InconsistentSingularityDataError(f"component {factor} has no place at infinity")
        components.append(
            ComponentTopology(
                degree=factor.total_degree,
                genus=genus,
                punctures=n,
                smooth=not records,
                certified=certify_absolutely_irreducible(factor),
            )
        )
    return _CurveData(spec, census, component_census, at_infinity, components)


def _gluing(census: Sequence[SingularityRecord]) -> int:
    return sum(r.orbit_size * (r.branches - 1) for r in census)


def _chi_by_components(data: _CurveData) -> int:
    return sum(2 - 2 * c.genus - c.punctures for c in data.components) - _gluing(data.census)


def _chi_whole_curve(data: _CurveData) -> int:
    d = data.spec.degree
    delta = sum(r.orbit_size * r.delta for r in data.census)
    delta += sum(p.orbit_size * p.total_delta for p in data.infinity)
    n_inf = sum(c.punctures for c in data.components)
    return 2 - (d - 1) * (d - 2) + 2 * delta - n_inf - _gluing(data.census)


def euler_characteristic(spec: CurveSpec, census: Optional[List[SingularityRecord]] = None) -> int:
    """Euler characteristic of the affine curve.

    Raises:
        InconsistentSingularityDataError: if the per-component and whole-curve
            computations disagree.
    """
    return _euler(_collect(spec, census))


def _euler(data: _CurveData) -> int:
    chi = _chi_by_components(data)
    check = _chi_whole_curve(data)
    if chi != check:
        raise InconsistentSingularityDataError(
            f"Euler characteristic {chi} from components but {check} from the whole curve"
        )
    return chi


def connected_components(spec: CurveSpec) -> int:
    """Components joined when they share a finite point (their ideal is not the unit ideal)."""
    spec = spec.irreducible_components()
    parent = list(range(len(spec.factors)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, f in enumerate(spec.factors):
        for j in range(i + 1, len(spec.factors)):
            if find(i) != find(j) and not Ideal([f, spec.factors[j]]).is_unit():
                parent[find(i)] = find(j)
    return len({find(i) for i in range(len(spec.factors))})


def betti_numbers(spec: CurveSpec, census: Optional[List[SingularityRecord]] = None) -> TopologyReport:
    """``b0`` by connectivity, ``χ`` from the normalization and ``b1 = b0 − χ``."""
    data = _collect(spec, census)
    chi = _euler(data)
    b0 = connected_components(data.spec)
    b1 = b0 - chi
    if b1 < 0:
        raise InconsistentSingularityDataError(f"negative first Betti number (b0={b0}, chi={chi})")
    incidence = [IncidencePoint(r.point, r.branches) for r in data.census if r.branches > 1]
    logger.info("topology of %s: b0=%d b1=%d chi=%d", spec, b0, b1, chi)
    return TopologyReport(b0, b1, chi, data.components, incidence, data.infinity)
