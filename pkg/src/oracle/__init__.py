"""Truncated-degree linear algebra for Ω¹/dA, local μ′ and monomial curves."""

from .presentation import (
    AlgebraPresentation,
    detect_weights,
    filtration_weights,
    germ_presentation,
    presentation_for_curve,
)
from .semigroup import MonomialCurve, SemigroupData, presentation_from_semigroup, semigroup_data
from .truncated import OracleResult, truncated_h1, truncated_mu_prime

__all__ = [
    "AlgebraPresentation",
    "MonomialCurve",
    "OracleResult",
    "SemigroupData",
    "detect_weights",
    "filtration_weights",
    "germ_presentation",
    "presentation_for_curve",
    "presentation_from_semigroup",
    "semigroup_data",
    "truncated_h1",
    "truncated_mu_prime",
]
