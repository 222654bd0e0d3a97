"""Tests for curve specs, points at infinity, genus and Betti numbers."""

import sys
from pathlib import Path

import pytest

root_dir = Path(__file__).resolve().parents[1]
if str(root_dir) not in sys.path:
    sys.path.insert(0, str(root_dir))

from src.algebra import parse_polynomial  # type: ignore  # noqa: E402
from src.errors import (  # type: ignore  # noqa: E402
    CurveNotReducedError,
    DomainError,
    NotAbsolutelyIrreducibleError,
)
from src.topology.betti import (  # type: ignore  # noqa: E402
    betti_numbers,
    connected_components,
    euler_characteristic,
)
from src.topology.curve import CurveSpec  # type: ignore  # noqa: E402
from src.topology.genus import component_genus  # type: ignore  # noqa: E402
from src.topology.infinity import projective_data  # type: ignore  # noqa: E402

XY = ("x", "y")


def curve(*factors: str) -> CurveSpec:
    return CurveSpec(XY, tuple(parse_polynomial(f, XY) for f in factors))


@pytest.mark.parametrize(
    "factors, b0, b1, chi",
    [
        (("y - x",), 1, 0, 1),
        (("x", "x - 1"), 2, 0, 2),
        (("x", "y"), 1, 0, 1),
        (("x^2 + y^2 - 1",), 1, 1, 0),
        (("xy - 1",), 1, 1, 0),
        (("y^2 - x^3",), 1, 0, 1),
        (("y^2 - x^3 - x^2",), 1, 1, 0),
        (("x", "y", "x + y"), 1, 0, 1),
        (("y^2 - x^3 - x - 1",), 1, 2, -1),
        (("xy - 1", "xy - 2"), 2, 2, 0),
    ],
)
def test_betti_numbers(factors, b0: int, b1: int, chi: int) -> None:
    report = betti_numbers(curve(*factors))
    assert (report.b0, report.b1, report.chi) == (b0, b1, chi)
    assert report.b0 - report.b1 == report.chi


@pytest.mark.parametrize(
    "factors, line",
    [
        (("xy - 1",), "x"),
        (("x", "x - 1"), "x - 2"),
        (("xy - 1", "xy - 2"), "x"),
    ],
)
def test_disjoint_line_adds_a_contractible_component(factors, line: str) -> None:
    before = betti_numbers(curve(*factors))
    after = betti_numbers(curve(*factors, line))
    assert after.b0 == before.b0 + 1
    assert after.b1 == before.b1
    assert after.chi == before.chi + 1


def test_circle_has_two_conjugate_places_at_infinity() -> None:
    spec = curve("x^2 + y^2 - 1")
    (point,) = projective_data(spec)
    assert point.orbit_size == 2
    (component,) = betti_numbers(spec).components
    assert (component.genus, component.punctures, component.smooth) == (0, 2, True)


def test_smooth_cubic_is_an_elliptic_curve_minus_a_point() -> None:
    (component,) = betti_numbers(curve("y^2 - x^3 - x - 1")).components
    assert component.genus == 1
    assert component.punctures == 1
    assert component.certified


def test_conic_without_rational_points_is_kept_uncertified() -> None:
    report = betti_numbers(curve("x^2 + y^2 + 1"))
    (component,) = report.components
    assert not component.certified
    assert (report.b0, report.b1, report.chi) == (1, 1, 0)


def test_conjugate_lines_fail_the_genus_check() -> None:
    # x^2 + y^2 = (x + iy)(x - iy) has no smooth rational point
    with pytest.raises(NotAbsolutelyIrreducibleError):
        betti_numbers(curve("x^2 + y^2"))


def test_cusp_genus_drops_by_delta() -> None:
    assert component_genus(parse_polynomial("y^2 - x^3", XY)) == 0
    assert component_genus(parse_polynomial("y^2 - x^3 - x - 1", XY)) == 1


def test_tacnode_splits_into_two_parabolas() -> None:
    spec = curve("y^2 - x^4")
    assert len(spec.irreducible_components().factors) == 2
    report = betti_numbers(spec)
    assert len(report.components) == 2
    assert report.b1 == 0
    assert [p.branches for p in report.incidence] == [2]


def test_connected_components_by_shared_points() -> None:
    assert connected_components(curve("x", "x - 1")) == 2
    assert connected_components(curve("x", "y", "x - 1")) == 1
    assert connected_components(curve("xy - 1", "xy - 2")) == 2


def test_euler_characteristic_of_three_lines() -> None:
    # three lines, gluing three branches at one point
    assert euler_characteristic(curve("x", "y", "x + y")) == 1


def test_repeated_factor_is_not_reduced() -> None:
    with pytest.raises(CurveNotReducedError):
        curve("x^2*y")
    with pytest.raises(CurveNotReducedError):
        curve("x", "2x")
    with pytest.raises(CurveNotReducedError):
        CurveSpec.from_polynomial(parse_polynomial("x^2*y", XY))


def test_curve_spec_validation() -> None:
    with pytest.raises(DomainError):
        CurveSpec(("x", "y", "z"), (parse_polynomial("x", ("x", "y", "z")),))
    with pytest.raises(DomainError):
        CurveSpec(XY, ())


def test_from_polynomial_splits_factors() -> None:
    spec = CurveSpec.from_polynomial(parse_polynomial("xy(x + y)", XY))
    assert len(spec.factors) == 3
    assert spec.product.total_degree == 3
