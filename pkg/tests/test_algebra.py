"""Tests for exact polynomial arithmetic, resultants and factorization."""

import sys
from fractions import Fraction
from pathlib import Path

import pytest

root_dir = Path(__file__).resolve().parents[1]
if str(root_dir) not in sys.path:
    sys.path.insert(0, str(root_dir))

from src.algebra import (  # type: ignore  # noqa: E402
    MultiPoly,
    factor_over_number_field,
    factor_rational,
    factor_univariate,
    is_squarefree,
    number_field,
    parse_polynomial,
    resultant,
    squarefree_part,
)
from src.algebra.sympy_bridge import gcd  # type: ignore  # noqa: E402
from src.errors import DomainError, SpecSyntaxError  # type: ignore  # noqa: E402
from src.groebner.ideal import Ideal  # type: ignore  # noqa: E402

XY = ("x", "y")


def P(text: str, ring=XY) -> MultiPoly:
    return parse_polynomial(text, ring)


def test_parse_and_expand() -> None:
    assert P("(x + y)^2") == P("x^2 + 2xy + y^2")
    assert P("3/2 x*y - x y") == P("1/2 xy")


def test_parse_reports_column() -> None:
    with pytest.raises(SpecSyntaxError) as err:
        parse_polynomial("x + z", XY, line=4)
    assert err.value.line == 4
    assert err.value.column == 5
    assert err.value.kind == "unknown variable"


def test_parse_rejects_dangling_operator() -> None:
    with pytest.raises(SpecSyntaxError):
        P("x^2 +")


def test_resultant_of_cusp_and_its_derivative() -> None:
    f = P("y^2 - x^3")
    r = resultant(f, f.derivative("y"), "y")
    assert r == P("-4x^3", ("x",))
    assert r.variables == ("x",)


def test_resultant_detects_common_root() -> None:
    # both vanish on x = 1
    r = resultant(P("x^2 - 1"), P("x - 1"), "x")
    assert r.is_zero


def test_resultant_of_zero_raises() -> None:
    with pytest.raises(DomainError):
        resultant(P("x"), MultiPoly.zero(XY), "y")


def test_resultant_of_coprime_univariates() -> None:
    x = ("x",)
    r = resultant(P("x^2 + 1", x), P("x - 1", x), "x")
    assert r.variables == ()
    assert r.is_constant and r.constant_term() == 2


def test_resultant_lies_in_the_ideal() -> None:
    f, g = P("y^2 - x^3 - 1"), P("xy - 2")
    r = resultant(f, g, "y")
    assert not r.is_zero
    assert Ideal([f, g], XY).contains(r.with_variables(XY))


def test_factor_rational_splits_tacnode() -> None:
    factors = factor_rational(P("y^2 - x^4"))
    assert len(factors) == 2
    assert all(k == 1 for _, k in factors)
    assert sorted(f.total_degree for f, _ in factors) == [2, 2]


def test_squarefree_detection() -> None:
    assert is_squarefree(P("xy(x + y)"))
    assert not is_squarefree(P("x^2*y"))
    assert squarefree_part(P("x^2*y")) == P("xy")


def test_factor_univariate_multiplies_back() -> None:
    x = ("x",)
    f = P("x^3 - x^2", x)
    factors = factor_univariate(f)
    assert sorted(factors, key=lambda t: -t[1]) == [(P("x", x), 2), (P("x - 1", x), 1)]
    product = MultiPoly.constant(x, 1)
    for g, k in factors:
        product = product * g**k
    assert product == f


def test_squarefree_part_has_no_common_factor_with_its_partials() -> None:
    s = squarefree_part(P("x^3*y^2*(x + y)"))
    assert s == P("xy(x + y)")
    common = gcd(gcd(s, s.derivative("x")), s.derivative("y"))
    assert common.is_constant


def test_number_field_arithmetic() -> None:
    K = number_field([1, 0, 1], name="i")
    i = K.generator
    assert i * i == -1
    assert (i + 1) * (1 - i) == 2
    assert (1 / (i + 1)) * (i + 1) == 1
    # t^3 + t^2 reduces to -t - 1 modulo t^2 + 1
    assert K.element([0, 0, 1, 1]) == -i - 1
    assert K.element([0, 0, 1, 1]).coeffs == (Fraction(-1), Fraction(-1))


def test_number_field_rejects_reducible_polynomial() -> None:
    with pytest.raises(DomainError):
        number_field([-1, 0, 1])


def test_trager_factorization_over_gaussian_rationals() -> None:
    K = number_field([1, 0, 1], name="i")
    factors = factor_over_number_field([1, 0, 1], K)
    assert len(factors) == 2
    assert all(len(f) == 2 and k == 1 for f, k in factors)


def test_weighted_top_form_of_nodal_cubic() -> None:
    f = P("y^2 - x^3 - x^2")
    assert f.weighted_top_form((2, 3)) == P("y^2 - x^3")
    assert f.weighted_top_form((1, 1)) == P("-x^3")


def test_evaluate_exactly() -> None:
    f = P("x^2 - 2y")
    assert f.evaluate({"x": Fraction(1, 2), "y": Fraction(1, 8)}) == 0
