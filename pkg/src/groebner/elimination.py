"""Elimination ideals through lexicographic bases."""

from __future__ import annotations

import logging
from typing import Iterable

from ..algebra.polynomial import lex
from ..errors import DomainError
from .buchberger import groebner_basis
from .ideal import Ideal

logger = logging.getLogger(__name__)


def eliminate(ideal: Ideal, keep: Iterable[str]) -> Ideal:
    """Generators of ``ideal ∩ ℚ[keep]``, as an ideal of the ring ``keep``.

    The lex basis ranks the eliminated variables above the kept ones; the basis
    elements free of eliminated variables generate the elimination ideal.
    """
    keep_set = set(keep)
    unknown = keep_set - set(ideal.variables)
    if unknown:
        raise DomainError(f"variables {sorted(unknown)} are not in the ring {ideal.variables}")
    kept = tuple(v for v in ideal.variables if v in keep_set)
    dropped = [v for v in ideal.variables if v not in keep_set]
    order = lex(ideal.variables, dropped + list(kept))
    gb = groebner_basis(ideal, order)
    gens = [
        g.with_variables(kept)
        for g in gb.basis
        if all(v in keep_set for v in g.used_variables())
    ]
    logger.debug("eliminated %s: %d generators remain", dropped, len(gens))
    return Ideal(gens, kept)
