"""Branch counting by rational Newton-Puiseux expansions.

A germ is a dict ``{(i, j): c}`` for ``c x^i y^j`` vanishing at the origin.
Each compact edge of the Newton polygon carries an edge polynomial; a simple
root of it is one branch, a multiple root is resolved by the substitution

    x = ξ^a X^u,   y = X^v (ξ^b + Y),   b u - a v = 1,

followed by division by the largest power of X, which keeps every coefficient
in the field generated by ξ.
"""

from __future__ import annotations

import logging
from math import comb, gcd
from typing import Dict, List, Optional, Tuple

from ..algebra.factor import factor_dense, number_field
from ..algebra.numberfield import NumberField
from ..algebra.polynomial import MultiPoly
from ..config import PUISEUX_DEPTH_LIMIT
from ..errors import BudgetExceededError, CurveNotReducedError, DomainError, UnsupportedFieldError
from ..groebner.solve import AlgebraicPoint
from .points import require_plane

logger = logging.getLogger(__name__)

Germ = Dict[Tuple[int, int], object]


def _lower_hull(germ: Germ) -> List[Tuple[int, int]]:
    """Vertices of the lower Newton hull from the y-axis to the x-axis."""
    n0 = min(j for (i, j) in germ if i == 0)
    m0 = min(i for (i, j) in germ if j == 0)
    vertices = [(0, n0)]
    ic, jc = 0, n0
    while jc > 0:
        best: Optional[Tuple[int, int]] = None
        for (i, j) in germ:
            if j >= jc or (j > 0 and i < ic):
                continue
            if j == 0 and i != m0:
                continue
            if best is None:
                best = (i, j)
                continue
            lhs = (i - ic) * (jc - best[1])
            rhs = (best[0] - ic) * (jc - j)
            if lhs < rhs or (lhs == rhs and j < best[1]):
                best = (i, j)
        vertices.append(best)
        ic, jc = best
    return vertices


def _edge_polynomial(germ: Germ, p1: Tuple[int, int], p2: Tuple[int, int]) -> Tuple[List, int, int, int]:
    (i1, j1), (i2, j2) = p1, p2
    di, dj = i2 - i1, j1 - j2
    g = gcd(di, dj)
    u, v = dj // g, di // g
    zero = germ[p1] - germ[p1]
    # Q(z) = Σ_k a_(i1 + k v, j1 - k u) z^(g - k), constant term first
    coeffs = [germ.get((i1 + k * v, j1 - k * u), zero) for k in range(g, -1, -1)]
    return coeffs, u, v, g


def _bezout(u: int, v: int) -> Tuple[int, int]:
    """Nonnegative ``(a, b)`` with ``b u - a v = 1``."""
    b = 1 if v == 1 else pow(u, -1, v)
    a = (b * u - 1) // v
    return a, b


def _transform(germ: Germ, xi, u: int, v: int, level: int) -> Germ:
    a, b = _bezout(u, v)
    xa = xi ** a
    xb = xi ** b
    out: Germ = {}
    for (i, j), c in germ.items():
        base = c * xa ** i
        shift = u * i + v * j - level
        for t in range(j + 1):
            term = base * comb(j, t) * xb ** (j - t)
            key = (shift, t)
            out[key] = out[key] + term if key in out else term
    return {k: c for k, c in out.items() if c}


def _count(germ: Germ, field: Optional[NumberField], depth: int) -> int:
    if depth > PUISEUX_DEPTH_LIMIT:
        raise BudgetExceededError(f"Newton-Puiseux recursion deeper than {PUISEUX_DEPTH_LIMIT}")
    a = min(i for (i, _) in germ)
    b = min(j for (_, j) in germ)
    if a > 1 or b > 1:
        raise CurveNotReducedError("germ has a multiple coordinate-axis component")
    count = a + b
    germ = {(i - a, j - b): c for (i, j), c in germ.items()}
    if (0, 0) in germ:
        return count
    hull = _lower_hull(germ)
    for p1, p2 in zip(hull, hull[1:]):
        coeffs, u, v, _ = _edge_polynomial(germ, p1, p2)
        level = u * p1[0] + v * p1[1]
        for factor, mult in factor_dense(coeffs, field):
            m = len(factor) - 1
            if mult == 1:
                count += m
                continue
            if m == 1:
                sub_field = field
                xi = -factor[0]
                sub = germ
            elif field is None:
                sub_field = number_field(factor, name="c")
                xi = sub_field.generator
                sub = {k: sub_field.convert(c) for k, c in germ.items()}
            else:
                raise UnsupportedFieldError(
                    "branch analysis needs an extension of a number field",
                    kind="unsupported singularity field",
                )
            transformed = _transform(sub, xi, u, v, level)
            count += m * _count(transformed, sub_field, depth + 1)
    return count


def germ_at(f: MultiPoly, p: AlgebraicPoint) -> Germ:
    """Translate ``p`` to the origin and return the germ as an exponent dict."""
    g = f.translate(p.shifts(f.variables))
    if g.constant_term():
        raise DomainError(f"point {p} does not lie on {f}")
    return {(m[0], m[1]): c for m, c in g.items()}


def branch_count(f: MultiPoly, p: AlgebraicPoint) -> int:
    """Number of analytic branches of ``f = 0`` at ``p``."""
    require_plane(f)
    germ = germ_at(f, p)
    r = _count(germ, p.field, 0)
    logger.debug("branches of %s at %s: %d", f, p, r)
    return r
