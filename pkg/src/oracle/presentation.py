"""Finitely presented algebras ``A = ℚ[x₁..xₙ]/I`` handed to the oracle.

A presentation carries positive integer weights.  When every relation is
weighted-homogeneous the presentation is *graded* and the oracle works one
weighted degree at a time; otherwise the weights only define the filtration
used for truncation.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import List, Optional, Sequence, Tuple

from ..algebra.factor import is_squarefree
from ..algebra.polynomial import MonomialOrder, MultiPoly, weighted_grevlex
from ..errors import DomainError, NotACurvePresentationError, UnsupportedFieldError
from ..groebner.buchberger import GroebnerBasis, groebner_basis
from ..groebner.ideal import Ideal
from ..groebner.solve import AlgebraicPoint
from ..groebner.staircase import krull_dimension
from ..topology.curve import CurveSpec

logger = logging.getLogger(__name__)

FILTRATION_WEIGHT_LIMIT = 6


@dataclass(frozen=True, eq=False)
class AlgebraPresentation:
    variables: Tuple[str, ...]
    relations: Ideal
    weights: Tuple[int, ...]
    graded: bool

    @classmethod
    def build(
        cls,
        variables: Sequence[str],
        relations: Sequence[MultiPoly],
        weights: Optional[Sequence[int]] = None,
    ) -> "AlgebraPresentation":
        """Presentation with detected weights unless ``weights`` is given.

        Raises:
            DomainError: on non-positive weights or a weight count mismatch.
        """
        variables = tuple(variables)
        rels = list(relations)
        if weights is None:
            weights = detect_weights(rels, variables) or (1,) * len(variables)
        weights = tuple(int(w) for w in weights)
        if len(weights) != len(variables) or any(w <= 0 for w in weights):
            raise DomainError(f"weights {weights} do not fit the ring {variables}")
        graded = all(r.is_weighted_homogeneous(weights) for r in rels)
        return cls(variables, Ideal(rels, variables), weights, graded)

    @property
    def order(self) -> MonomialOrder:
        return weighted_grevlex(self.variables, self.weights)

    @cached_property
    def groebner(self) -> GroebnerBasis:
        gb = groebner_basis(self.relations, self.order)
        logger.debug("presentation basis: %d elements", len(gb))
        return gb

    @property
    def relation_degrees(self) -> List[int]:
        return [r.weighted_degree(self.weights) for r in self.relations]

    @property
    def is_germ(self) -> bool:
        """True when every relation vanishes at the origin."""
        return all(not r.constant_term() for r in self.relations)

    def check_curve(self) -> GroebnerBasis:
        """The basis of the relations, after checking that ``A`` has Krull dimension one.

        Raises:
            NotACurvePresentationError: otherwise.
        """
        gb = self.groebner
        dim = krull_dimension(gb)
        if dim != 1:
            raise NotACurvePresentationError(f"quotient has Krull dimension {dim}, expected 1")
        return gb

    def __str__(self) -> str:
        rels = ", ".join(str(r) for r in self.relations) or "0"
        return f"Q[{', '.join(self.variables)}]/({rels}) weights {self.weights}"


def detect_weights(
    relations: Sequence[MultiPoly], variables: Optional[Sequence[str]] = None
) -> Optional[Tuple[int, ...]]:
    """Positive weights making every relation weighted-homogeneous, or None.

    In two variables the weights are read off one exponent difference; in
    more variables only the all-ones weights are tried.
    """
    if variables is None:
        variables = relations[0].variables
    n = len(variables)
    diffs = []
    for r in relations:
        monos = list(r.terms)
        diffs.extend(tuple(a - b for a, b in zip(m, monos[0])) for m in monos[1:])
    ones = (1,) * n
    if not diffs:
        return ones
    if n == 2:
        di, dj = diffs[0]
        g = gcd(di, dj)
        a, b = dj // g, -di // g
        if a < 0:
            a, b = -a, -b
        if a <= 0 or b <= 0:
            return None
        if all(a * d0 + b * d1 == 0 for d0, d1 in diffs):
            return (a, b)
        return None
    return ones if all(sum(d) == 0 for d in diffs) else None


def filtration_weights(f: MultiPoly) -> Tuple[int, int]:
    """Small coprime weights whose weighted top form of ``f`` is squarefree; (1, 1) otherwise."""
    limit = FILTRATION_WEIGHT_LIMIT
    for total in range(2, 2 * limit + 1):
        for a in range(1, total):
            b = total - a
            if a > limit or b > limit or gcd(a, b) != 1:
                continue
            if is_squarefree(f.weighted_top_form((a, b))):
                return (a, b)
    logger.debug("no squarefree weighted top form for %s; using unit weights", f)
    return (1, 1)


def presentation_for_curve(spec: CurveSpec) -> AlgebraPresentation:
    """``ℚ[x,y]/(f)`` with the declared weights, detected weights or filtration weights."""
    f = spec.product
    weights = spec.weights or detect_weights([f], spec.variables) or filtration_weights(f)
    pres = AlgebraPresentation.build(spec.variables, [f], weights)
    logger.info("oracle presentation %s (%s)", pres, "graded" if pres.graded else "filtered")
    return pres


def germ_presentation(
    f: MultiPoly, point: AlgebraicPoint, weights: Optional[Sequence[int]] = None
) -> AlgebraPresentation:
    """The plane germ of ``f`` at a rational point, moved to the origin.

    Raises:
        UnsupportedFieldError: for points with irrational coordinates.
    """
    if not point.is_rational:
        raise UnsupportedFieldError(f"germ oracle needs a rational point, got {point}")
    g = f.translate(point.shifts(f.variables))
    if g.constant_term():
        raise DomainError(f"point {point} does not lie on {f}")
    return AlgebraPresentation.build(g.variables, [g], weights)
