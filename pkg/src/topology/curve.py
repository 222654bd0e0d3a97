"""Reduced affine plane curves given by their irreducible factors."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Optional, Sequence, Tuple

from ..algebra.factor import factor_dense_rational, factor_rational, is_squarefree
from ..algebra.polynomial import MultiPoly
from ..algebra.sympy_bridge import gcd
from ..errors import CurveNotReducedError, DomainError, NotAbsolutelyIrreducibleError

logger = logging.getLogger(__name__)

SEARCH_RADIUS = 6


@dataclass(frozen=True)
class CurveSpec:
    """A reduced plane curve ``f = Π factors``; each factor is asserted absolutely irreducible.

    ``tags`` and ``weights`` carry optional hints from a spec file (``tame``,
    ``lci``, oracle weights).
    """

    variables: Tuple[str, str]
    factors: Tuple[MultiPoly, ...]
    tags: Tuple[str, ...] = ()
    weights: Optional[Tuple[int, ...]] = None
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if len(self.variables) != 2:
            raise DomainError(f"plane curves need two variables, got {self.variables}")
        if not self.factors:
            raise DomainError("a curve needs at least one factor")
        for f in self.factors:
            if f.variables != tuple(self.variables):
                raise DomainError(f"factor {f} is not in the ring {self.variables}")
            if f.is_constant:
                raise DomainError(f"factor {f} is constant")
        for i, f in enumerate(self.factors):
            if not is_squarefree(f):
                raise CurveNotReducedError(f"factor {f} is not squarefree")
            for g in self.factors[i + 1:]:
                if not gcd(f, g).is_constant:
                    raise CurveNotReducedError(f"factors {f} and {g} share a component")

    @property
    def product(self) -> MultiPoly:
        return reduce(lambda a, b: a * b, self.factors)

    @property
    def degree(self) -> int:
        return self.product.total_degree

    def irreducible_components(self) -> "CurveSpec":
        """The same curve with every factor split into its ℚ-irreducible parts."""
        parts = []
        for f in self.factors:
            split = factor_rational(f)
            parts.extend([f] if len(split) == 1 else [p for p, _ in split])
        if len(parts) == len(self.factors):
            return self
        return CurveSpec(self.variables, tuple(parts), self.tags, self.weights, self.name)

    @classmethod
    def from_polynomial(
        cls, f: MultiPoly, tags: Sequence[str] = (), weights: Optional[Sequence[int]] = None
    ) -> "CurveSpec":
        """Split ``f`` into its ℚ-irreducible factors.

        Raises:
            CurveNotReducedError: if a factor is repeated.
        """
        if f.is_constant:
            raise DomainError("a constant polynomial does not define a curve")
        parts = factor_rational(f)
        repeated = [str(p) for p, k in parts if k > 1]
        if repeated:
            raise CurveNotReducedError(f"{f} has repeated factors {repeated}")
        return cls(
            f.variables,
            tuple(p for p, _ in parts),
            tuple(tags),
            tuple(weights) if weights else None,
        )

    def __str__(self) -> str:
        return " * ".join(f"({f})" for f in self.factors)


def smooth_rational_point(f: MultiPoly, radius: int = SEARCH_RADIUS) -> Optional[Tuple[Fraction, Fraction]]:
    """A smooth point of ``f = 0`` with rational coordinates, searched on vertical lines."""
    x, y = f.variables
    fx, fy = f.derivative(x), f.derivative(y)
    for step in range(2 * radius + 1):
        x0 = Fraction((step + 1) // 2 * (1 if step % 2 else -1))
        line = f.specialize({x: x0})
        if line.is_zero:
            candidates = [Fraction(0)]
        elif line.is_constant:
            continue
        else:
            candidates = [
                -fac[0] for fac, _ in factor_dense_rational(line.as_univariate(y)) if len(fac) == 2
            ]
        for y0 in candidates:
            point = {x: x0, y: y0}
            if fx.evaluate(point) or fy.evaluate(point):
                return x0, y0
    return None


def certify_absolutely_irreducible(f: MultiPoly) -> bool:
    """True when a smooth rational point proves that the ℚ-irreducible ``f`` is absolutely irreducible.

    Conjugate components of a ℚ-irreducible curve meet their conjugates in
    every rational point, so a smooth rational point rules them out.

    This point certificate is the only test run; there is no mod-p
    factorization. An uncertified factor is kept as irreducible with a
    warning, and the genus and whole-curve χ cross-checks in ``betti``
    report the inconsistency if the assumption was wrong.
    """
    if len(factor_rational(f)) > 1:
        raise NotAbsolutelyIrreducibleError(f"{f} is reducible over Q")
    point = smooth_rational_point(f)
    if point is None:
        logger.warning("no smooth rational point found on %s; absolute irreducibility is assumed", f)
        return False
    return True
