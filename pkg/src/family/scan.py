"""Special values, generic ``h_f`` and semicontinuity verdicts for a family of fibers."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from ..algebra.factor import factor_univariate, is_squarefree
from ..algebra.polynomial import MultiPoly
from ..config import FAMILY_PARAMS
from ..derham.h1 import h1_dimension
from ..errors import DegenerateFamilyError, GenericSamplingError
from ..groebner.elimination import eliminate
from ..groebner.ideal import Ideal
from ..groebner.staircase import quotient_dimension
from ..singular.milnor import total_milnor, total_milnor_on_curve
from ..topology.curve import CurveSpec
from .section6 import section6_fiber
from .spec import (
    FAILS,
    HOLDS,
    SECTION6,
    SKIPPED,
    FamilyReport,
    FamilySpec,
    FiberRecord,
    SemicontinuityVerdict,
    TameCheck,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpecialValues:
    rational: Tuple[Fraction, ...]
    irrational: Tuple[str, ...] = ()


def _parameter_name(variables) -> str:
    t = "t"
    while t in variables:
        t += "_"
    return t


def special_values(fam: FamilySpec) -> SpecialValues:
    """Critical values of ``f``: the roots of the eliminant of ``(f − t, f_x, f_y)``.

    Values where ``f − y`` is not squarefree are critical, so they are included.

    Raises:
        DegenerateFamilyError: if the eliminant vanishes.
    """
    if fam.kind == SECTION6:
        return SpecialValues((Fraction(0),))
    f = fam.f
    x, y = f.variables
    t = _parameter_name(f.variables)
    ring = f.variables + (t,)
    F = f.with_variables(ring)
    tvar = MultiPoly.variable(ring, t)
    ideal = Ideal([F - tvar, F.derivative(x), F.derivative(y)], ring)
    elim = eliminate(ideal, [t])
    if elim.is_zero:
        raise DegenerateFamilyError(f"critical values of {f} are not isolated")
    (eliminant,) = elim.groebner().basis
    rational: List[Fraction] = []
    irrational: List[str] = []
    if not eliminant.is_constant:
        for fac, _ in factor_univariate(eliminant):
            if fac.total_degree == 1:
                coeffs = fac.as_univariate(t)
                rational.append(-Fraction(coeffs[0]) / Fraction(coeffs[1]))
            else:
                irrational.append(str(fac))
    logger.info("special values of %s: %s %s", f, sorted(rational), irrational)
    return SpecialValues(tuple(sorted(rational)), tuple(irrational))


def _finite_singular(f: MultiPoly, y: Fraction) -> bool:
    x, yv = f.variables
    gb = Ideal([f - y, f.derivative(x), f.derivative(yv)]).groebner()
    return not quotient_dimension(gb).infinite


def fiber_h1(fam: FamilySpec, y) -> FiberRecord:
    """``h¹(f⁻¹(y))``; non-reduced plane fibers are recorded as skipped."""
    y = Fraction(y)
    if fam.kind == SECTION6:
        return section6_fiber(y)
    g = fam.f - y
    finite = _finite_singular(fam.f, y)
    if not is_squarefree(g):
        logger.info("fiber %s = %s is not reduced; skipped", fam.f, y)
        return FiberRecord(y, reduced=False, finite_singular=finite, h1=None)
    report = h1_dimension(CurveSpec.from_polynomial(g))
    return FiberRecord(y, True, finite, report.h1_formula, report.b1, report.sum_mu_prime)


def _sample_values(excluded: Tuple[Fraction, ...], seed: int) -> List[Fraction]:
    count = FAMILY_PARAMS["generic_samples"]
    radius = FAMILY_PARAMS["sample_range"]
    rng = np.random.default_rng(seed)
    values: List[Fraction] = []
    while len(values) < count:
        c = Fraction(int(rng.integers(-radius, radius + 1)))
        if c != 0 and c not in excluded and c not in values:
            values.append(c)
    return values


def generic_h1(
    fam: FamilySpec, seed: Optional[int] = None, specials: Optional[SpecialValues] = None
) -> Tuple[int, List[FiberRecord]]:
    """``h_f``: the common ``h¹`` of fibers at values sampled away from the special set.

    Raises:
        GenericSamplingError: if the sampled fibers disagree.
    """
    seed = FAMILY_PARAMS["seed"] if seed is None else seed
    specials = specials or special_values(fam)
    records = []
    for c in _sample_values(specials.rational, seed):
        rec = fiber_h1(fam, c)
        records.append(FiberRecord(rec.y, rec.reduced, rec.finite_singular, rec.h1, rec.b1,
                                   rec.sum_mu_prime, generic=True))
    values = {r.h1 for r in records}
    if len(values) != 1 or None in values:
        raise GenericSamplingError(
            f"generic fibers disagree: {[(str(r.y), r.h1) for r in records]}"
        )
    h_f = values.pop()
    logger.info("generic h1 of %s: %d (samples %s)", fam.f, h_f, [str(r.y) for r in records])
    return h_f, records


def tame_check(fam: FamilySpec, report: FamilyReport) -> TameCheck:
    """For tame ``f``: every fiber has ``h¹ = μ`` and special fibers ``b₁ = μ − μ^y``."""
    mu = total_milnor(fam.f)
    specials = set(report.special_values)
    details: List[str] = []
    for rec in report.fibers:
        if rec.h1 is None:
            continue
        if rec.h1 != mu:
            details.append(f"h1({rec.y}) = {rec.h1} != mu = {mu}")
        if rec.y in specials:
            mu_y = total_milnor_on_curve(fam.f - rec.y)
            if rec.b1 != mu - mu_y:
                details.append(f"b1({rec.y}) = {rec.b1} != mu - mu^y = {mu - mu_y}")
    if details:
        logger.warning("tame check failed for %s: %s", fam.f, details)
    return TameCheck(mu, not details, tuple(details))


def family_scan(fam: FamilySpec, seed: Optional[int] = None) -> FamilyReport:
    """Special values, ``h_f``, special and generic fibers, and the semicontinuity verdicts."""
    specials = special_values(fam)
    h_f, generic = generic_h1(fam, seed, specials)
    special_fibers = [fiber_h1(fam, y0) for y0 in specials.rational]
    verdicts = []
    for rec in special_fibers:
        if rec.h1 is None:
            verdict = SKIPPED
        else:
            verdict = HOLDS if rec.h1 <= h_f else FAILS
        verdicts.append(SemicontinuityVerdict(rec.y, rec.h1, h_f, verdict, fam.lci, rec.finite_singular))
    report = FamilyReport(
        kind=fam.kind,
        special_values=list(specials.rational),
        irrational_special_values=list(specials.irrational),
        h_f=h_f,
        fibers=special_fibers + generic,
        semicontinuity=verdicts,
        lci=fam.lci,
    )
    if fam.tame:
        report.tame = tame_check(fam, report)
    for v in report.violations:
        logger.error("semicontinuity fails at %s with lci and finite singular locus", v.y)
    return report
