"""Tests for the truncated-degree oracle and numerical semigroups."""

import sys
from fractions import Fraction
from pathlib import Path

import pytest

root_dir = Path(__file__).resolve().parents[1]
if str(root_dir) not in sys.path:
    sys.path.insert(0, str(root_dir))

from src.algebra import parse_polynomial  # type: ignore  # noqa: E402
from src.errors import (  # type: ignore  # noqa: E402
    DomainError,
    NotACurvePresentationError,
    NotANumericalSemigroupError,
    OracleError,
    UnsupportedFieldError,
)
from src.groebner.solve import AlgebraicPoint  # type: ignore  # noqa: E402
from src.oracle import (  # type: ignore  # noqa: E402
    AlgebraPresentation,
    MonomialCurve,
    OracleResult,
    detect_weights,
    filtration_weights,
    germ_presentation,
    presentation_for_curve,
    presentation_from_semigroup,
    semigroup_data,
    truncated_h1,
    truncated_mu_prime,
)
from src.oracle.semigroup import toric_ideal  # type: ignore  # noqa: E402
from src.singular.census import singularity_census  # type: ignore  # noqa: E402
from src.singular.milnor import local_milnor  # type: ignore  # noqa: E402
from src.topology.curve import CurveSpec  # type: ignore  # noqa: E402

XY = ("x", "y")
ORIGIN = AlgebraicPoint(None, (Fraction(0), Fraction(0)))


def P(text: str, ring=XY):
    return parse_polynomial(text, ring)


def plane(text: str, weights=None) -> AlgebraPresentation:
    return AlgebraPresentation.build(XY, [P(text)], weights)


# -- weights and presentations ------------------------------------------------

def test_detect_weights() -> None:
    assert detect_weights([P("y^2 - x^3")]) == (2, 3)
    assert detect_weights([P("y^2 - x^4")]) == (1, 2)
    assert detect_weights([P("xy")]) == (1, 1)
    assert detect_weights([P("xy - 1")]) is None


def test_filtration_weights() -> None:
    assert filtration_weights(P("y^2 - x^3 - x^2")) == (2, 3)
    assert filtration_weights(P("y^2 - x^3 - x - 1")) == (2, 3)
    assert filtration_weights(P("xy - 1")) == (1, 1)
    assert filtration_weights(P("x(x - 1)")) == (1, 1)


def test_presentation_is_graded_only_for_homogeneous_relations() -> None:
    assert plane("y^2 - x^3").graded
    assert not plane("y^2 - x^3 - x^2").graded
    spec = CurveSpec(XY, (P("y^2 - x^3 - x^2"),))
    pres = presentation_for_curve(spec)
    assert pres.weights == (2, 3)
    assert not pres.graded


def test_presentation_rejects_bad_weights() -> None:
    with pytest.raises(DomainError):
        plane("y^2 - x^3", (2, 0))
    with pytest.raises(DomainError):
        plane("y^2 - x^3", (1, 2, 3))


# -- global oracle ------------------------------------------------------------

def test_graded_cusp() -> None:
    result = truncated_h1(plane("y^2 - x^3"), degree_bound=20)
    assert result.graded
    assert result.value == 2
    assert result.stabilized
    assert [k for k, inc in result.per_degree if inc] != []


def test_graded_cross_and_line() -> None:
    assert truncated_h1(plane("xy")).value == 1
    assert truncated_h1(plane("y - x")).value == 0


def test_filtered_hyperbola() -> None:
    result = truncated_h1(plane("xy - 1"), degree_bound=12)
    assert not result.graded
    assert result.value == 1
    assert result.per_degree[:3] == ((1, 0), (2, 1), (3, 0))
    assert result.stabilized


@pytest.mark.slow
def test_filtered_smooth_cubic_matches_b1() -> None:
    result = truncated_h1(plane("y^2 - x^3 - x - 1", (2, 3)), degree_bound=16)
    assert result.value == 2


def test_short_bound_is_not_certified() -> None:
    # the cusp needs degree 12 before stabilization can be proved
    result = truncated_h1(plane("y^2 - x^3"), degree_bound=8)
    assert not result.stabilized


def test_permuted_variables_give_identical_increments() -> None:
    a = truncated_h1(plane("y^2 - x^3"), degree_bound=16)
    yx = ("y", "x")
    b = truncated_h1(AlgebraPresentation.build(yx, [P("y^2 - x^3", yx)]), degree_bound=16)
    assert a.per_degree == b.per_degree


def test_oracle_rejects_non_curves() -> None:
    points = AlgebraPresentation.build(XY, [P("x"), P("y")])
    with pytest.raises(NotACurvePresentationError):
        truncated_h1(points)
    with pytest.raises(DomainError):
        truncated_h1(plane("xy"), degree_bound=0)


def test_oracle_result_checks_its_sum() -> None:
    with pytest.raises(OracleError):
        OracleResult(4, ((1, 0), (2, 1)), 2, False, 4)


# -- local oracle ---------------------------------------------------------------

@pytest.mark.parametrize(
    "germ, expected",
    [("y - x^2", 0), ("xy", 1), ("y^2 - x^3", 2), ("y^2 - x^4", 3), ("xy(x + y)", 4)],
)
def test_germ_oracle_matches_milnor_number(germ: str, expected: int) -> None:
    result = truncated_mu_prime(plane(germ), degree_bound=24)
    assert result.value == expected
    assert local_milnor(P(germ), ORIGIN) == expected
    assert result.stabilized


@pytest.mark.slow
def test_filtered_germ_of_nodal_cubic() -> None:
    pres = germ_presentation(P("y^2 - x^3 - x^2"), ORIGIN)
    assert not pres.graded
    assert truncated_mu_prime(pres, degree_bound=10).value == 1


def test_germ_presentation_translates_rational_points() -> None:
    pres = germ_presentation(P("(y - 1)^2 - (x - 2)^3"), AlgebraicPoint(None, (Fraction(2), Fraction(1))))
    assert pres.is_germ
    assert pres.graded
    assert truncated_mu_prime(pres, degree_bound=16).value == 2


def test_germ_presentation_needs_rational_points() -> None:
    (record,) = singularity_census(P("y^2 - (x^2 - 2)^2"))
    with pytest.raises(UnsupportedFieldError):
        germ_presentation(P("y^2 - (x^2 - 2)^2"), record.point)


def test_germ_oracle_rejects_relations_off_the_origin() -> None:
    with pytest.raises(NotACurvePresentationError):
        truncated_mu_prime(plane("xy - 1"))


# -- semigroups ---------------------------------------------------------------------

@pytest.mark.parametrize(
    "generators, gaps, conductor",
    [((2, 3), (1,), 2), ((3, 4), (1, 2, 5), 6), ((3, 4, 5), (1, 2), 3), ((1,), (), 0), ((3, 5), (1, 2, 4, 7), 8)],
)
def test_semigroup_data(generators, gaps, conductor: int) -> None:
    data = semigroup_data(generators)
    assert data.gaps == gaps
    assert data.conductor == conductor
    assert data.delta == len(gaps)
    assert not any(data.contains(g) for g in gaps)
    assert data.contains(conductor)


def test_semigroup_needs_coprime_generators() -> None:
    with pytest.raises(NotANumericalSemigroupError):
        semigroup_data((4, 6))
    with pytest.raises(DomainError):
        semigroup_data((0, 3))


def test_toric_ideal_of_plane_branch() -> None:
    ideal = toric_ideal((2, 3))
    assert ideal.variables == XY
    assert ideal.contains(P("y^2 - x^3"))


def test_semigroup_gaps_equal_delta_of_plane_branch() -> None:
    (record,) = singularity_census(P("y^3 - x^4"))
    assert record.delta == semigroup_data((3, 4)).delta == 3


def test_monomial_plane_branch_mu_prime() -> None:
    curve = MonomialCurve(XY, (3, 4))
    pres = curve.presentation()
    assert pres.graded
    assert pres.weights == (3, 4)
    # mu = 2 delta for a branch
    assert truncated_mu_prime(pres, degree_bound=24).value == 2 * curve.semigroup().delta


@pytest.mark.slow
def test_space_monomial_curve_has_positive_mu_prime() -> None:
    pres = presentation_from_semigroup((3, 4, 5))
    assert pres.variables == ("x", "y", "z")
    result = truncated_mu_prime(pres, degree_bound=14)
    assert result.value >= 1
