"""Staircases of monomial ideals: standard monomials, quotient dimensions, Krull dimension."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from ..algebra.polynomial import Monomial, mono_divides
from .buchberger import GroebnerBasis


@dataclass(frozen=True)
class Staircase:
    variables: Tuple[str, ...]
    leading_monomials: Tuple[Monomial, ...]
    standard_monomials: Optional[Tuple[Monomial, ...]]

    @property
    def infinite(self) -> bool:
        return self.standard_monomials is None

    @property
    def dimension(self) -> Optional[int]:
        """Vector-space dimension of the quotient, or None when infinite."""
        return None if self.standard_monomials is None else len(self.standard_monomials)

    def is_standard(self, m: Monomial) -> bool:
        return is_standard(m, self.leading_monomials)


def is_standard(m: Monomial, leading: Sequence[Monomial]) -> bool:
    return not any(mono_divides(lm, m) for lm in leading)


def _pure_power_bounds(leading: Sequence[Monomial], n: int) -> List[Optional[int]]:
    bounds: List[Optional[int]] = [None] * n
    for lm in leading:
        support = [i for i, e in enumerate(lm) if e]
        if len(support) == 1:
            i = support[0]
            if bounds[i] is None or lm[i] < bounds[i]:
                bounds[i] = lm[i]
    return bounds


def quotient_dimension(gb: GroebnerBasis) -> Staircase:
    """Standard monomials of ``gb``; infinite unless every variable has a pure power."""
    leading = gb.leading_monomials
    n = len(gb.variables)
    if gb.is_unit:
        return Staircase(gb.variables, leading, ())
    bounds = _pure_power_bounds(leading, n)
    if any(b is None for b in bounds):
        return Staircase(gb.variables, leading, None)
    standard = tuple(
        m for m in itertools.product(*(range(b) for b in bounds)) if is_standard(m, leading)
    )
    standard = tuple(sorted(standard, key=lambda m: (sum(m), tuple(reversed(m)))))
    return Staircase(gb.variables, leading, standard)


def krull_dimension(gb: GroebnerBasis) -> int:
    """Largest size of a variable set free of leading monomials; -1 for the unit ideal."""
    if gb.is_unit:
        return -1
    n = len(gb.variables)
    supports = [frozenset(i for i, e in enumerate(lm) if e) for lm in gb.leading_monomials]
    for size in range(n, -1, -1):
        for subset in itertools.combinations(range(n), size):
            s = frozenset(subset)
            if not any(sup <= s for sup in supports):
                return size
    return 0


def monomials_of_weighted_degree(weights: Sequence[int], degree: int) -> Iterator[Monomial]:
    """All exponent vectors with ``Σ wᵢ eᵢ = degree`` in increasing lexicographic order."""
    n = len(weights)
    if n == 0:
        if degree == 0:
            yield ()
        return

    def rec(i: int, remaining: int) -> Iterator[Tuple[int, ...]]:
        if i == n - 1:
            if remaining % weights[i] == 0:
                yield (remaining // weights[i],)
            return
        for e in range(remaining // weights[i] + 1):
            for rest in rec(i + 1, remaining - e * weights[i]):
                yield (e,) + rest

    yield from rec(0, degree)


def standard_monomials_of_degree(
    leading: Sequence[Monomial], weights: Sequence[int], degree: int
) -> List[Monomial]:
    """Standard monomials of a fixed weighted degree (finite even when the quotient is not)."""
    return [m for m in monomials_of_weighted_degree(weights, degree) if is_standard(m, leading)]
