"""Conversions between `MultiPoly` / dense lists and sympy polynomials over QQ."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

import sympy as sp
from sympy import QQ, Poly

from ..errors import DomainError
from .numberfield import NumberFieldElement
from .polynomial import MultiPoly


def _to_rational(c) -> sp.Rational:
    if isinstance(c, NumberFieldElement):
        c = c.as_fraction()
    return sp.Rational(c.numerator, c.denominator)


def _from_rational(c) -> Fraction:
    c = sp.Rational(c)
    return Fraction(int(c.p), int(c.q))


def symbols_for(variables: Sequence[str]) -> List[sp.Symbol]:
    return [sp.Symbol(v) for v in variables]


def to_sympy(p: MultiPoly) -> Poly:
    if not p.is_rational():
        raise DomainError("only rational polynomials can be handed to sympy")
    gens = symbols_for(p.variables)
    return Poly.from_dict({m: _to_rational(c) for m, c in p.items()}, *gens, domain=QQ)


def from_sympy(poly: Poly, variables: Sequence[str]) -> MultiPoly:
    names = [str(g) for g in poly.gens]
    terms = {}
    for mono, c in poly.terms():
        exps = dict(zip(names, mono))
        terms[tuple(exps.get(v, 0) for v in variables)] = _from_rational(c)
    return MultiPoly(variables, terms)


def dense_to_sympy(coeffs: Sequence, symbol: str = "z") -> Poly:
    z = sp.Symbol(symbol)
    if not coeffs:
        return Poly(0, z, domain=QQ)
    return Poly([_to_rational(c) for c in reversed(list(coeffs))], z, domain=QQ)


def dense_from_sympy(poly: Poly) -> List[Fraction]:
    coeffs = [_from_rational(c) for c in poly.all_coeffs()]
    out = list(reversed(coeffs))
    while out and not out[-1]:
        out.pop()
    return out


def gcd(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Greatest common divisor over ℚ (multivariate)."""
    return from_sympy(sp.gcd(to_sympy(p), to_sympy(q)), p.variables)
