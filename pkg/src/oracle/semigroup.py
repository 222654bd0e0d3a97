"""Numerical semigroups of monomial branches ``t ↦ (t^a₁, …, t^aₖ)``."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Optional, Sequence, Tuple

import numpy as np

from ..algebra.polynomial import MultiPoly
from ..errors import DomainError, NotANumericalSemigroupError
from ..groebner.elimination import eliminate
from ..groebner.ideal import Ideal
from .presentation import AlgebraPresentation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SemigroupData:
    generators: Tuple[int, ...]
    gaps: Tuple[int, ...]
    conductor: int

    @property
    def frobenius_number(self) -> int:
        return self.conductor - 1

    @property
    def delta(self) -> int:
        """Number of gaps, the δ invariant of the branch."""
        return len(self.gaps)

    def contains(self, n: int) -> bool:
        return n >= 0 and n not in self.gaps


def _validate(generators: Sequence[int]) -> Tuple[int, ...]:
    gens = tuple(sorted({int(a) for a in generators}))
    if not gens or gens[0] <= 0:
        raise DomainError(f"semigroup generators must be positive integers, got {list(generators)}")
    if reduce(gcd, gens) != 1:
        raise NotANumericalSemigroupError(f"generators {list(gens)} have gcd {reduce(gcd, gens)}")
    return gens


def semigroup_data(generators: Sequence[int]) -> SemigroupData:
    """Gaps and conductor of ``⟨generators⟩``.

    Membership is sieved with numpy up to ``(a_min − 1)(a_max − 1) + a_min``,
    which exceeds the Frobenius number.

    Raises:
        NotANumericalSemigroupError: if the generators have gcd different from 1.
    """
    gens = _validate(generators)
    bound = (gens[0] - 1) * (gens[-1] - 1) + gens[0]
    member = np.zeros(bound + 1, dtype=bool)
    member[0] = True
    while True:
        grown = member.copy()
        for a in gens:
            if a <= bound:
                grown[a:] |= member[:-a]
        if np.array_equal(grown, member):
            break
        member = grown
    gaps = tuple(int(n) for n in np.flatnonzero(~member))
    conductor = gaps[-1] + 1 if gaps else 0
    logger.debug("semigroup %s: gaps %s, conductor %d", gens, gaps, conductor)
    return SemigroupData(gens, gaps, conductor)


def default_variables(k: int) -> Tuple[str, ...]:
    if k <= 3:
        return ("x", "y", "z")[:k]
    return tuple(f"x{i + 1}" for i in range(k))


def toric_ideal(generators: Sequence[int], variables: Optional[Sequence[str]] = None) -> Ideal:
    """Relations among ``t^a₁, …, t^aₖ``: eliminate ``t`` from ``(xᵢ − t^aᵢ)``."""
    gens = tuple(int(a) for a in generators)
    variables = tuple(variables) if variables else default_variables(len(gens))
    if len(variables) != len(gens):
        raise DomainError(f"{len(gens)} generators need {len(gens)} variables, got {variables}")
    t = "t"
    while t in variables:
        t += "_"
    ring = (t,) + variables
    tvar = MultiPoly.variable(ring, t)
    ideal = Ideal([MultiPoly.variable(ring, v) - tvar ** a for v, a in zip(variables, gens)], ring)
    return eliminate(ideal, variables)


def presentation_from_semigroup(
    generators: Sequence[int], variables: Optional[Sequence[str]] = None
) -> AlgebraPresentation:
    """The graded presentation of the monomial curve, weighted by the generators."""
    gens = tuple(int(a) for a in generators)
    semigroup_data(gens)
    ideal = toric_ideal(gens, variables)
    return AlgebraPresentation.build(ideal.variables, list(ideal.generators), gens)


@dataclass(frozen=True)
class MonomialCurve:
    """A monomial curve declared in a spec file by ``tag: monomial(a, b, …)``."""

    variables: Tuple[str, ...]
    generators: Tuple[int, ...]
    name: str = ""

    def presentation(self) -> AlgebraPresentation:
        return presentation_from_semigroup(self.generators, self.variables)

    def semigroup(self) -> SemigroupData:
        return semigroup_data(self.generators)
