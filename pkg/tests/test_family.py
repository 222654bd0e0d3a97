"""Tests for fiber families: special values, generic h1 and semicontinuity."""

import sys
from fractions import Fraction
from pathlib import Path

import pytest

root_dir = Path(__file__).resolve().parents[1]
if str(root_dir) not in sys.path:
    sys.path.insert(0, str(root_dir))

from src.algebra import MultiPoly, parse_polynomial  # type: ignore  # noqa: E402
from src.errors import DomainError  # type: ignore  # noqa: E402
from src.family import (  # type: ignore  # noqa: E402
    FamilySpec,
    family_scan,
    fiber_h1,
    generic_h1,
    section6_family,
    section6_fiber,
    special_values,
)
from src.family.section6 import surface_equations, surface_ideal  # type: ignore  # noqa: E402
from src.family.spec import FAILS, HOLDS, SKIPPED, SemicontinuityVerdict  # type: ignore  # noqa: E402

XY = ("x", "y")


def family(text: str, *tags: str) -> FamilySpec:
    return FamilySpec.plane(parse_polynomial(text, XY), tags)


def test_special_values() -> None:
    assert special_values(family("y^2 - x^3")).rational == (Fraction(0),)
    assert special_values(family("xy")).rational == (Fraction(0),)
    assert special_values(family("x + x^2*y")).rational == ()


def test_special_values_of_nodal_cubic() -> None:
    # critical points (0, 0) and (-2/3, 0)
    specials = special_values(family("y^2 - x^3 - x^2"))
    assert specials.rational == (Fraction(-4, 27), Fraction(0))
    assert specials.irrational == ()


def test_irrational_special_values_are_reported() -> None:
    assert special_values(family("y^2 + x^3 - 3x")).rational == (Fraction(-2), Fraction(2))
    # critical points at x^2 = 2/3 give the values t^2 = 32/27
    specials = special_values(family("y^2 + x^3 - 2x"))
    assert specials.rational == ()
    assert len(specials.irrational) == 1


def test_fiber_h1() -> None:
    assert fiber_h1(family("xy"), 0).h1 == 1
    assert fiber_h1(family("xy"), 3).h1 == 1
    assert fiber_h1(family("y^2 - x^3"), 0).h1 == 2


def test_non_reduced_fiber_is_skipped() -> None:
    record = fiber_h1(family("x^2*y"), 0)
    assert not record.reduced
    assert record.h1 is None
    assert not record.finite_singular


def test_generic_samples_are_reproducible() -> None:
    fam = family("xy")
    h_a, recs_a = generic_h1(fam, seed=7)
    h_b, recs_b = generic_h1(fam, seed=7)
    assert h_a == h_b == 1
    assert [r.y for r in recs_a] == [r.y for r in recs_b]
    assert all(r.generic and r.y != 0 for r in recs_a)


@pytest.mark.slow
def test_tame_cusp_family() -> None:
    report = family_scan(family("y^2 - x^3", "tame"))
    assert report.h_f == 2
    assert report.special_values == [Fraction(0)]
    assert [v.verdict for v in report.semicontinuity] == [HOLDS]
    assert report.tame is not None and report.tame.mu == 2
    assert report.tame.consistent
    assert report.violations == []


@pytest.mark.slow
def test_family_without_critical_points() -> None:
    report = family_scan(family("x + x^2*y"))
    assert report.special_values == []
    assert report.h_f == 1
    assert report.semicontinuity == []


@pytest.mark.slow
def test_tacnode_family_generic_h1() -> None:
    report = family_scan(family("y^2 - x^4"))
    assert report.h_f == 3
    assert report.fiber(0).h1 == 3


@pytest.mark.slow
def test_non_reduced_special_fiber_is_skipped_in_verdicts() -> None:
    report = family_scan(family("x^2*y"))
    (verdict,) = report.semicontinuity
    assert verdict.verdict == SKIPPED
    assert not verdict.violates_theorem


def test_violation_needs_both_hypotheses() -> None:
    y0 = Fraction(0)
    assert SemicontinuityVerdict(y0, 3, 1, FAILS, True, True).violates_theorem
    assert not SemicontinuityVerdict(y0, 3, 1, FAILS, False, True).violates_theorem
    assert not SemicontinuityVerdict(y0, 3, 1, FAILS, True, False).violates_theorem
    assert not SemicontinuityVerdict(y0, 1, 1, HOLDS, True, True).violates_theorem


def test_plane_family_needs_two_variables() -> None:
    with pytest.raises(DomainError):
        FamilySpec.plane(MultiPoly.variable(("x", "y", "z"), "x"))
    with pytest.raises(DomainError):
        FamilySpec.plane(MultiPoly.constant(XY, 1))


def test_surface_equations_lie_in_the_toric_ideal() -> None:
    ideal = surface_ideal()
    assert ideal.variables == ("u", "v", "w1", "w2")
    assert all(ideal.contains(e) for e in surface_equations())


def test_section6_fibers() -> None:
    assert section6_fiber(5).h1 == 0
    assert section6_fiber(Fraction(-1, 2)).h1 == 0
    cusp = section6_fiber(0)
    assert (cusp.h1, cusp.b1, cusp.sum_mu_prime) == (2, 0, 2)


@pytest.mark.slow
def test_section6_breaks_semicontinuity_without_lci() -> None:
    report = family_scan(section6_family())
    assert report.h_f == 0
    assert report.fiber(0).h1 == 2
    (verdict,) = report.semicontinuity
    assert verdict.verdict == FAILS
    assert not report.lci
    assert report.violations == []
