"""Pydantic documents for JSON reports and errors."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Literal, Optional, Union

from pydantic import BaseModel, Field

from ..derham.h1 import H1Report
from ..errors import CurveH1Error, SpecSyntaxError
from ..family.spec import FamilyReport, FiberRecord, SemicontinuityVerdict, TameCheck
from ..oracle.semigroup import SemigroupData
from ..oracle.truncated import OracleResult
from ..singular.census import SingularityRecord
from ..topology.betti import ComponentTopology

SKIPPED_NON_REDUCED = "skipped (non-reduced)"


def rational_str(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


class SingularityDoc(BaseModel):
    """One Galois orbit of singular points."""

    point: List[str]
    field: str = Field(..., description="'rational' or the minimal polynomial of the coordinates")
    orbit_size: int
    mu: int
    branches: int
    delta: int
    mu_prime: int

    @classmethod
    def from_record(cls, r: SingularityRecord) -> "SingularityDoc":
        return cls(
            point=r.point.coordinate_strings(),
            field=r.point.field_label,
            orbit_size=r.orbit_size,
            mu=r.mu,
            branches=r.branches,
            delta=r.delta,
            mu_prime=r.mu_prime,
        )


class DegreeIncrement(BaseModel):
    degree: int
    increment: int


class OracleDoc(BaseModel):
    """Truncated-degree oracle output."""

    degree_bound: int
    per_degree: List[DegreeIncrement]
    value: int
    stabilized: bool
    stabilization_window: int
    graded: bool

    @classmethod
    def from_result(cls, r: OracleResult) -> "OracleDoc":
        return cls(
            degree_bound=r.degree_bound,
            per_degree=[DegreeIncrement(degree=k, increment=inc) for k, inc in r.per_degree],
            value=r.value,
            stabilized=r.stabilized,
            stabilization_window=r.stabilization_window,
            graded=r.graded,
        )


class ComponentDoc(BaseModel):
    degree: int
    genus: int
    punctures: int
    smooth: bool
    certified: bool

    @classmethod
    def from_topology(cls, c: ComponentTopology) -> "ComponentDoc":
        return cls(
            degree=c.degree, genus=c.genus, punctures=c.punctures, smooth=c.smooth, certified=c.certified
        )


class H1Doc(BaseModel):
    """Both sides of the H¹ identity for one curve."""

    curve: str
    b0: int
    b1: int
    chi: int
    singularities: List[SingularityDoc]
    sum_mu_prime: int
    h1_formula: int
    h1_oracle: Optional[OracleDoc] = None
    verdict: Literal["agree", "disagree", "oracle-unstable", "unchecked"]
    components: List[ComponentDoc] = Field(default_factory=list)

    @classmethod
    def from_report(cls, curve: str, r: H1Report) -> "H1Doc":
        return cls(
            curve=curve,
            b0=r.b0,
            b1=r.b1,
            chi=r.chi,
            singularities=[SingularityDoc.from_record(s) for s in r.singularities],
            sum_mu_prime=r.sum_mu_prime,
            h1_formula=r.h1_formula,
            h1_oracle=OracleDoc.from_result(r.h1_oracle) if r.h1_oracle else None,
            verdict=r.verdict,
            components=[ComponentDoc.from_topology(c) for c in r.topology.components] if r.topology else [],
        )


class FiberDoc(BaseModel):
    y: str
    reduced: bool
    finite_singular: bool
    h1: Union[int, Literal["skipped (non-reduced)"]]
    b1: Optional[int] = None
    sum_mu_prime: Optional[int] = None
    generic: bool = False

    @classmethod
    def from_record(cls, r: FiberRecord) -> "FiberDoc":
        return cls(
            y=rational_str(r.y),
            reduced=r.reduced,
            finite_singular=r.finite_singular,
            h1=SKIPPED_NON_REDUCED if r.h1 is None else r.h1,
            b1=r.b1,
            sum_mu_prime=r.sum_mu_prime,
            generic=r.generic,
        )


class VerdictDoc(BaseModel):
    y: str
    h1: Optional[int]
    h_f: int
    verdict: Literal["holds", "fails", "skipped"]
    lci: bool
    finite_singular: bool

    @classmethod
    def from_verdict(cls, v: SemicontinuityVerdict) -> "VerdictDoc":
        return cls(
            y=rational_str(v.y),
            h1=v.h1,
            h_f=v.h_f,
            verdict=v.verdict,
            lci=v.lci,
            finite_singular=v.finite_singular,
        )


class TameDoc(BaseModel):
    mu: int
    consistent: bool
    details: List[str] = Field(default_factory=list)

    @classmethod
    def from_check(cls, t: TameCheck) -> "TameDoc":
        return cls(mu=t.mu, consistent=t.consistent, details=list(t.details))


class FamilyDoc(BaseModel):
    """Fibers, generic h¹ and semicontinuity verdicts of a family."""

    family: str
    kind: Literal["plane", "section6"]
    special_values: List[str]
    irrational_special_values: List[str] = Field(default_factory=list)
    h_f: int
    fibers: List[FiberDoc]
    semicontinuity: List[VerdictDoc]
    lci: bool
    tame_check: Optional[TameDoc] = None

    @classmethod
    def from_report(cls, family: str, r: FamilyReport) -> "FamilyDoc":
        return cls(
            family=family,
            kind=r.kind,
            special_values=[rational_str(y) for y in r.special_values],
            irrational_special_values=list(r.irrational_special_values),
            h_f=r.h_f,
            fibers=[FiberDoc.from_record(f) for f in r.fibers],
            semicontinuity=[VerdictDoc.from_verdict(v) for v in r.semicontinuity],
            lci=r.lci,
            tame_check=TameDoc.from_check(r.tame) if r.tame else None,
        )


class Section6Doc(BaseModel):
    """Summary of the non-lci surface example with its full family report."""

    h_f: int
    h1_at_0: int
    semicontinuity: Literal["holds", "fails", "skipped"]
    lci: bool
    report: FamilyDoc

    @classmethod
    def from_report(cls, r: FamilyReport) -> "Section6Doc":
        at_zero = r.fiber(0)
        verdict = next(v for v in r.semicontinuity if v.y == 0)
        return cls(
            h_f=r.h_f,
            h1_at_0=at_zero.h1,
            semicontinuity=verdict.verdict,
            lci=r.lci,
            report=FamilyDoc.from_report("section6", r),
        )


class SemigroupDoc(BaseModel):
    generators: List[int]
    gaps: List[int]
    conductor: int

    @classmethod
    def from_data(cls, s: SemigroupData) -> "SemigroupDoc":
        return cls(generators=list(s.generators), gaps=list(s.gaps), conductor=s.conductor)


class MonomialOracleDoc(BaseModel):
    curve: str
    semigroup: SemigroupDoc
    relations: List[str]
    oracle: OracleDoc


class CorpusEntryDoc(BaseModel):
    name: str
    kind: str
    status: Literal["ok", "mismatch", "error"]
    expected: Dict[str, Union[int, bool, str, List[str]]] = Field(default_factory=dict)
    observed: Dict[str, Union[int, bool, str, List[str]]] = Field(default_factory=dict)
    message: Optional[str] = None


class CorpusDoc(BaseModel):
    entries: List[CorpusEntryDoc]
    mismatches: int


class ErrorDoc(BaseModel):
    kind: str
    message: str
    line: Optional[int] = None
    column: Optional[int] = None

    @classmethod
    def from_exception(cls, exc: Exception, kind: Optional[str] = None) -> "ErrorDoc":
        if kind is not None:
            return cls(kind=kind, message=str(exc) or type(exc).__name__)
        if isinstance(exc, SpecSyntaxError):
            return cls(kind=exc.kind, message=exc.detail, line=exc.line, column=exc.column)
        if isinstance(exc, CurveH1Error):
            return cls(kind=exc.kind, message=exc.message)
        return cls(kind="usage error", message=str(exc))


class ErrorEnvelope(BaseModel):
    error: ErrorDoc
