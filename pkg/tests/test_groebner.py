"""Tests for the Buchberger engine, staircases, elimination and the point solver."""

import itertools
import sys
from pathlib import Path

import pytest

root_dir = Path(__file__).resolve().parents[1]
if str(root_dir) not in sys.path:
    sys.path.insert(0, str(root_dir))

from src.algebra import lex, parse_polynomial  # type: ignore  # noqa: E402
from src.errors import BudgetExceededError, DomainError  # type: ignore  # noqa: E402
from src.groebner.buchberger import groebner_basis, normal_form  # type: ignore  # noqa: E402
from src.groebner.elimination import eliminate  # type: ignore  # noqa: E402
from src.groebner.ideal import Ideal  # type: ignore  # noqa: E402
from src.groebner.solve import solve_zero_dimensional  # type: ignore  # noqa: E402
from src.oracle.linalg import rank  # type: ignore  # noqa: E402
from src.groebner.staircase import (  # type: ignore  # noqa: E402
    krull_dimension,
    quotient_dimension,
    standard_monomials_of_degree,
)

XY = ("x", "y")


def ideal(*texts: str, ring=XY) -> Ideal:
    return Ideal([parse_polynomial(t, ring) for t in texts], ring)


def test_quotient_dimension_of_points() -> None:
    # x^3 = 1 and y = x^2: three points over C
    gb = groebner_basis(ideal("x^2 - y", "xy - 1"))
    staircase = quotient_dimension(gb)
    assert not staircase.infinite
    assert staircase.dimension == 3


def test_membership_by_normal_form() -> None:
    gb = groebner_basis(ideal("x^2 - y", "xy - 1"))
    assert gb.contains(parse_polynomial("y^3 - 1", XY))
    assert not normal_form(parse_polynomial("y - 1", XY), gb).is_zero


def test_unit_ideal() -> None:
    gb = groebner_basis(ideal("x", "x - 1"))
    assert gb.is_unit
    assert quotient_dimension(gb).dimension == 0
    assert krull_dimension(gb) == -1


def test_basis_is_order_dependent_but_ideal_is_not() -> None:
    I = ideal("x^2 - y", "xy - 1")
    g1 = groebner_basis(I)
    g2 = groebner_basis(I, lex(XY, ["y", "x"]))
    for p in g1:
        assert g2.contains(p)
    for p in g2:
        assert g1.contains(p)


def test_krull_dimension() -> None:
    assert krull_dimension(groebner_basis(ideal("y^2 - x^3"))) == 1
    assert krull_dimension(groebner_basis(ideal("x", "y"))) == 0
    assert quotient_dimension(groebner_basis(ideal("y^2 - x^3"))).infinite


def test_standard_monomials_grow_linearly_on_a_curve() -> None:
    gb = groebner_basis(ideal("xy - 1"))
    counts = [len(standard_monomials_of_degree(gb.leading_monomials, (1, 1), k)) for k in range(1, 8)]
    assert counts == [2] * 7


def test_pair_budget() -> None:
    with pytest.raises(BudgetExceededError):
        groebner_basis(ideal("x^2 - y", "xy - 1"), pair_budget=0)


def test_eliminate_parametrized_cusp() -> None:
    ring = ("t", "x", "y")
    elim = eliminate(ideal("x - t^2", "y - t^3", ring=ring), ["x", "y"])
    assert elim.variables == XY
    assert elim.contains(parse_polynomial("y^2 - x^3", XY))
    assert not elim.contains(parse_polynomial("y - x", XY))


def test_eliminate_unknown_variable() -> None:
    with pytest.raises(DomainError):
        eliminate(ideal("x - y"), ["z"])


def test_solve_rational_points() -> None:
    points = solve_zero_dimensional(ideal("x^2 - x", "y"))
    assert len(points) == 2
    assert all(p.is_rational for p in points)
    assert sorted(p.coords[0] for p in points) == [0, 1]


def test_solve_conjugate_orbit() -> None:
    points = solve_zero_dimensional(ideal("x^2 - 2", "y - x"))
    assert len(points) == 1
    (p,) = points
    assert p.orbit_size == 2
    assert p.coords[0] * p.coords[0] == 2
    assert p.coords[1] == p.coords[0]


def test_solve_rejects_curves() -> None:
    with pytest.raises(DomainError):
        solve_zero_dimensional(ideal("y^2 - x^3"))


def test_reduced_basis_ignores_generator_order_and_scaling() -> None:
    gens = [parse_polynomial(t, XY) for t in ("x^2 - y", "xy - 1", "y^2 - x")]
    reference = groebner_basis(Ideal(gens, XY)).basis
    for perm in itertools.permutations(gens):
        assert groebner_basis(Ideal(list(perm), XY)).basis == reference
    scaled = [3 * gens[0], gens[1] * -2, gens[2]]
    assert groebner_basis(Ideal(scaled, XY)).basis == reference


def test_normal_form_is_idempotent() -> None:
    gb = groebner_basis(ideal("x^2 - y", "xy - 1"))
    p = parse_polynomial("x^5*y - 3x^3 + 2y^4 - x + 7", XY)
    r = normal_form(p, gb)
    assert normal_form(r, gb) == r
    assert gb.contains(p - r)


def _monomials(degree: int):
    return [(i, degree - i) for i in range(degree + 1)]


def brute_force_dimension(gens, top: int) -> int:
    """``Σ_d dim (R/I)_d`` from the span of ``m·g`` in each degree (homogeneous generators)."""
    total = 0
    for d in range(top + 1):
        column = {m: i for i, m in enumerate(_monomials(d))}
        rows = []
        for g in gens:
            shift = d - g.total_degree
            if shift < 0:
                continue
            for m in _monomials(shift):
                rows.append({column[k]: c for k, c in g.mul_term(m).terms.items()})
        total += len(column) - rank(rows, len(column))
    return total


@pytest.mark.parametrize("texts", [("x^2 - y^2", "xy"), ("x^2 + y^2", "x^3"), ("x^2", "y^3", "xy^2")])
def test_quotient_dimension_matches_linear_algebra(texts) -> None:
    I = ideal(*texts)
    staircase = quotient_dimension(groebner_basis(I))
    assert not staircase.infinite
    assert staircase.dimension == brute_force_dimension(list(I), top=8)
