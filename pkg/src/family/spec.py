"""Families of affine curves ``f⁻¹(y)`` and the records produced by scanning them."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..algebra.polynomial import MultiPoly
from ..errors import DomainError

PLANE = "plane"
SECTION6 = "section6"

HOLDS = "holds"
FAILS = "fails"
SKIPPED = "skipped"


@dataclass(frozen=True)
class FamilySpec:
    """A dominant map ``f: X → ℂ``; ``X = ℂ²`` for the plane kind.

    ``lci`` records whether ``X`` is a local complete intersection, which is
    the hypothesis of the semicontinuity theorem.
    """

    kind: str
    f: MultiPoly
    lci: bool
    tags: Tuple[str, ...] = ()
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if self.kind not in (PLANE, SECTION6):
            raise DomainError(f"unknown family kind {self.kind!r}")
        if self.f.is_constant:
            raise DomainError("the family map must be nonconstant")
        if self.kind == PLANE and self.f.nvars != 2:
            raise DomainError(f"plane families live on two variables, got {self.f.variables}")

    @classmethod
    def plane(cls, f: MultiPoly, tags: Sequence[str] = (), name: str = "") -> "FamilySpec":
        return cls(PLANE, f, True, tuple(tags), name)

    @property
    def tame(self) -> bool:
        return "tame" in self.tags


@dataclass(frozen=True)
class FiberRecord:
    """``h¹`` of one fiber; ``h1`` is None when the fiber was skipped as non-reduced."""

    y: Fraction
    reduced: bool
    finite_singular: bool
    h1: Optional[int]
    b1: Optional[int] = None
    sum_mu_prime: Optional[int] = None
    generic: bool = False

    def __post_init__(self) -> None:
        if self.h1 is not None and not self.reduced:
            raise DomainError(f"fiber at {self.y} is not reduced but carries h1")


@dataclass(frozen=True)
class SemicontinuityVerdict:
    y: Fraction
    h1: Optional[int]
    h_f: int
    verdict: str
    lci: bool
    finite_singular: bool

    @property
    def violates_theorem(self) -> bool:
        """A failure where the hypotheses of the semicontinuity theorem hold."""
        return self.verdict == FAILS and self.lci and self.finite_singular


@dataclass(frozen=True)
class TameCheck:
    mu: int
    consistent: bool
    details: Tuple[str, ...] = ()


@dataclass
class FamilyReport:
    kind: str
    special_values: List[Fraction]
    irrational_special_values: List[str]
    h_f: int
    fibers: List[FiberRecord]
    semicontinuity: List[SemicontinuityVerdict]
    lci: bool
    tame: Optional[TameCheck] = None

    @property
    def violations(self) -> List[SemicontinuityVerdict]:
        return [v for v in self.semicontinuity if v.violates_theorem]

    def fiber(self, y) -> FiberRecord:
        y = Fraction(y)
        for rec in self.fibers:
            if rec.y == y:
                return rec
        raise KeyError(y)
