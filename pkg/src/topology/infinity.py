"""Points at infinity of the projective closure and the local data there."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import reduce
from typing import Dict, List, Optional, Sequence, Tuple

from ..algebra import univariate as up
from ..algebra.factor import factor_dense_rational, number_field
from ..algebra.numberfield import NumberField
from ..algebra.polynomial import Coefficient, MultiPoly, format_coefficient
from ..groebner.solve import AlgebraicPoint
from ..singular.milnor import delta_invariant, local_milnor
from ..singular.puiseux import branch_count
from .curve import CurveSpec

logger = logging.getLogger(__name__)


@dataclass
class InfinityPoint:
    """A Galois orbit of points ``(X : Y : 0)`` with per-component local data.

    ``branches`` and ``deltas`` map component indices (into ``CurveSpec.factors``)
    to the number of branches and the delta invariant of that component there.
    ``total_delta`` is the delta invariant of the whole curve at the point.
    """

    field: Optional[NumberField]
    coords: Tuple[Coefficient, Coefficient]
    orbit_size: int
    branches: Dict[int, int] = field(default_factory=dict)
    deltas: Dict[int, int] = field(default_factory=dict)
    total_delta: int = 0

    @property
    def total_branches(self) -> int:
        return sum(self.branches.values())

    def __str__(self) -> str:
        X, Y = (format_coefficient(c) for c in self.coords)
        return f"({X} : {Y} : 0)" + (f" over {self.field}, orbit {self.orbit_size}" if self.field else "")


def homogenizing_name(variables: Sequence[str]) -> str:
    name = "z"
    while name in variables:
        name += "_"
    return name


def _chart(f: MultiPoly, z: str, fixed: str) -> MultiPoly:
    """Dehomogenize the projective closure of ``f`` by setting ``fixed = 1``."""
    return f.homogenize(z).specialize({fixed: 1})


def _local_data(chart: MultiPoly, point: AlgebraicPoint) -> Tuple[int, int]:
    """``(branches, delta)`` of a chart polynomial at a point (0 branches when off the curve)."""
    g = chart.translate(point.shifts(chart.variables))
    if g.constant_term():
        return 0, 0
    mu = local_milnor(chart, point)
    if mu == 0:
        return 1, 0
    r = branch_count(chart, point)
    return r, delta_invariant(mu, r)


def infinity_directions(top: MultiPoly) -> List[Tuple[Optional[NumberField], Tuple, int, str]]:
    """Orbits of zeros of a binary form: ``(field, (X, Y), orbit_size, chart variable fixed to 1)``."""
    x, y = top.variables
    d = top.total_degree
    dense = top.specialize({x: 1}).as_univariate(y)
    dense = up.trim(dense)
    out: List[Tuple[Optional[NumberField], Tuple, int, str]] = []
    if len(dense) > 1:
        for fac, _ in factor_dense_rational(dense):
            if len(fac) == 2:
                out.append((None, (1, -fac[0]), 1, x))
            else:
                K = number_field(fac, name="b")
                out.append((K, (K.one, K.generator), K.degree, x))
    if len(dense) - 1 < d:
        out.append((None, (0, 1), 1, y))
    return out


def projective_data(spec: CurveSpec) -> List[InfinityPoint]:
    """Points at infinity of the closure of ``spec`` with branch counts and deltas.

    The chart ``X = 1`` has coordinates ``(y, z)`` and the point ``(1 : t : 0)``
    sits at ``(t, 0)``; the point ``(0 : 1 : 0)`` is the origin of the chart ``Y = 1``.
    """
    x, y = spec.variables
    z = homogenizing_name(spec.variables)
    whole = spec.product
    points: List[InfinityPoint] = []
    for K, (X, Y), orbit, fixed in infinity_directions(whole.top_form()):
        if fixed == x:
            local = (Y, 0)
        else:
            local = (X, 0)
        charts = [_chart(f, z, fixed) for f in spec.factors]
        where = AlgebraicPoint(K, local, orbit)
        pt = InfinityPoint(K, (X, Y), orbit)
        for idx, chart in enumerate(charts):
            r, delta = _local_data(chart, where)
            if r:
                pt.branches[idx] = r
                pt.deltas[idx] = delta
        whole_chart = reduce(lambda a, b: a * b, charts)
        mu = local_milnor(whole_chart, where)
        pt.total_delta = delta_invariant(mu, pt.total_branches)
        points.append(pt)
        logger.debug("point at infinity %s: branches %s, delta %d", pt, pt.branches, pt.total_delta)
    return points


def punctures(points: Sequence[InfinityPoint], component: int) -> int:
    """Places at infinity of one component, counted with Galois orbits."""
    return sum(p.orbit_size * p.branches.get(component, 0) for p in points)
