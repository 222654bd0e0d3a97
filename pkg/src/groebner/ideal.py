"""Polynomial ideals given by generators."""

from __future__ import annotations

from typing import Iterable, Optional, Sequence, Tuple

from ..algebra.polynomial import MonomialOrder, MultiPoly
from ..errors import DomainError


class Ideal:
    """Ideal of a polynomial ring, stored as a list of nonzero generators.

    An empty generator list is the zero ideal.
    """

    def __init__(self, generators: Iterable[MultiPoly], variables: Optional[Sequence[str]] = None) -> None:
        gens = list(generators)
        if variables is None:
            if not gens:
                raise DomainError("an ideal needs generators or an explicit ring")
            variables = gens[0].variables
        self.variables: Tuple[str, ...] = tuple(variables)
        for g in gens:
            if g.variables != self.variables:
                raise DomainError(f"generator {g} is not in the ring {self.variables}")
        self.generators: Tuple[MultiPoly, ...] = tuple(g for g in gens if not g.is_zero)

    @classmethod
    def unit(cls, variables: Sequence[str]) -> "Ideal":
        return cls([MultiPoly.constant(variables, 1)], variables)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def __add__(self, other: "Ideal") -> "Ideal":
        if other.variables != self.variables:
            raise DomainError("sum of ideals in different rings")
        return Ideal(self.generators + other.generators, self.variables)

    def extend(self, polys: Iterable[MultiPoly]) -> "Ideal":
        return Ideal(list(self.generators) + list(polys), self.variables)

    def groebner(self, order: Optional[MonomialOrder] = None):
        from .buchberger import groebner_basis

        return groebner_basis(self, order)

    def is_unit(self) -> bool:
        return self.groebner().is_unit

    def contains(self, p: MultiPoly) -> bool:
        return self.groebner().contains(p)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __repr__(self) -> str:
        return f"Ideal({', '.join(str(g) for g in self.generators) or '0'})"
