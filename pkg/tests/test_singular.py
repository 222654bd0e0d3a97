"""Tests for the singularity census: Milnor numbers, branches and delta invariants."""

import sys
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

root_dir = Path(__file__).resolve().parents[1]
if str(root_dir) not in sys.path:
    sys.path.insert(0, str(root_dir))

from src.algebra import MultiPoly, parse_polynomial  # type: ignore  # noqa: E402
from src.errors import (  # type: ignore  # noqa: E402
    CriticalLocusNotFiniteError,
    CurveNotReducedError,
    DomainError,
    InconsistentSingularityDataError,
)
from src.groebner.solve import AlgebraicPoint  # type: ignore  # noqa: E402
from src.singular.census import singularity_census  # type: ignore  # noqa: E402
from src.singular.milnor import (  # type: ignore  # noqa: E402
    delta_invariant,
    local_milnor,
    total_milnor,
    total_milnor_on_curve,
)
from src.singular.points import singular_points  # type: ignore  # noqa: E402
from src.singular.puiseux import branch_count  # type: ignore  # noqa: E402

XY = ("x", "y")
ORIGIN = AlgebraicPoint(None, (Fraction(0), Fraction(0)))


def P(text: str, ring=XY):
    return parse_polynomial(text, ring)


@pytest.mark.parametrize(
    "curve, mu, branches",
    [
        ("xy", 1, 2),
        ("y^2 - x^3", 2, 1),
        ("y^2 - x^4", 3, 2),
        ("xy(x + y)", 4, 3),
        ("y^3 - x^4", 6, 1),
        ("y^2 - x^3 - x^2", 1, 2),
    ],
)
def test_local_invariants_at_origin(curve: str, mu: int, branches: int) -> None:
    f = P(curve)
    assert local_milnor(f, ORIGIN) == mu
    assert branch_count(f, ORIGIN) == branches
    # mu - r + 1 is even
    assert delta_invariant(mu, branches) * 2 == mu + branches - 1


def test_branch_count_is_symmetric_in_the_coordinates() -> None:
    f = P("y^2 - x^4")
    swapped = P("x^2 - y^4")
    assert branch_count(f, ORIGIN) == branch_count(swapped, ORIGIN) == 2


def test_branch_count_after_linear_change() -> None:
    # the tacnode moved by (x, y) -> (x, y + x)
    f = P("(y + x)^2 - x^4")
    assert branch_count(f, ORIGIN) == 2
    assert local_milnor(f, ORIGIN) == 3


def unimodular_change(seed: int):
    """Random integer matrix of determinant 1, as a product of shears."""
    rng = np.random.default_rng(seed)
    a, b, c = (int(v) for v in rng.integers(-3, 4, size=3))
    # [[1, a], [0, 1]] @ [[1, 0], [b, 1]] @ [[1, c], [0, 1]]
    m = np.array([[1, a], [0, 1]]) @ np.array([[1, 0], [b, 1]]) @ np.array([[1, c], [0, 1]])
    assert round(np.linalg.det(m)) == 1
    return [[int(v) for v in row] for row in m]


CORPUS_GERMS = [
    ("xy", 1, 2),
    ("y^2 - x^3", 2, 1),
    ("y^2 - x^4", 3, 2),
    ("xy(x + y)", 4, 3),
    ("y^3 - x^4", 6, 1),
    ("y^2 - x^3 - x^2", 1, 2),
]


@pytest.mark.parametrize("seed", [0, 1, 2])
@pytest.mark.parametrize("curve, mu, branches", CORPUS_GERMS)
def test_local_invariants_survive_unimodular_changes(curve: str, mu: int, branches: int, seed: int) -> None:
    (a, b), (c, d) = unimodular_change(seed)
    x, y = MultiPoly.variable(XY, "x"), MultiPoly.variable(XY, "y")
    g = P(curve).substitute({"x": a * x + b * y, "y": c * x + d * y})
    assert local_milnor(g, ORIGIN) == mu
    assert branch_count(g, ORIGIN) == branches


def test_local_milnor_off_the_curve_raises() -> None:
    with pytest.raises(DomainError):
        local_milnor(P("xy - 1"), ORIGIN)


def test_smooth_curves_have_no_singular_points() -> None:
    assert singular_points(P("x^2 + y^2 - 1")) == []
    assert singularity_census(P("y^2 - x^3 - x - 1")) == []


def test_census_of_nodal_cubic() -> None:
    (record,) = singularity_census(P("y^2 - x^3 - x^2"))
    assert record.point.is_rational
    assert (record.mu, record.branches, record.delta, record.mu_prime) == (1, 2, 1, 1)


def test_census_over_a_quadratic_field() -> None:
    # two parabolas crossing at x = ±sqrt(2), y = 0
    (record,) = singularity_census(P("y^2 - (x^2 - 2)^2"))
    assert record.orbit_size == 2
    assert record.point.field_label != "rational"
    assert (record.mu, record.branches, record.delta) == (1, 2, 1)


@pytest.mark.parametrize("curve", ["xy(x + y)", "y^2 - x^3 - x^2", "y^2 - (x^2 - 2)^2", "xy - x^3"])
def test_global_milnor_matches_local_sum(curve: str) -> None:
    f = P(curve)
    records = singularity_census(f, cross_check=False)
    assert total_milnor_on_curve(f) == sum(r.orbit_size * r.mu for r in records)


def test_total_milnor_counts_critical_points_off_the_curve() -> None:
    f = P("y^2 - x^3 - x^2")
    # critical points (0, 0) on the curve and (-2/3, 0) off it
    assert total_milnor(f) == 2
    assert total_milnor_on_curve(f) == 1


def test_non_finite_critical_locus() -> None:
    with pytest.raises(CriticalLocusNotFiniteError):
        total_milnor(P("x(x - 1)"))


def test_singular_points_require_reduced_input() -> None:
    with pytest.raises(CurveNotReducedError):
        singular_points(P("x^2*y"))


def test_delta_invariant_rejects_bad_parity() -> None:
    with pytest.raises(InconsistentSingularityDataError):
        delta_invariant(2, 2)
