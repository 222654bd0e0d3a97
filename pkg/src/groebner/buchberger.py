"""Reduced Groebner bases with Buchberger's algorithm.

Pairs are chosen with the normal selection strategy (smallest lcm of leading
monomials first) and pruned with the Gebauer-Moeller criteria, which contain
both of Buchberger's criteria.  The result is minimalized, interreduced, made
monic and sorted, so every ideal has exactly one basis per monomial order.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple, Union

from ..algebra.polynomial import (
    Monomial,
    MonomialOrder,
    MultiPoly,
    grevlex,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)
from ..config import GROEBNER_PAIR_BUDGET
from ..errors import BudgetExceededError, DomainError
from .ideal import Ideal

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


@dataclass(frozen=True)
class GroebnerBasis:
    variables: Tuple[str, ...]
    order: MonomialOrder
    basis: Tuple[MultiPoly, ...]

    @property
    def leading_monomials(self) -> Tuple[Monomial, ...]:
        return tuple(g.leading_monomial(self.order) for g in self.basis)

    @property
    def is_unit(self) -> bool:
        return any(g.is_constant for g in self.basis)

    @property
    def is_zero(self) -> bool:
        return not self.basis

    def reduce(self, p: MultiPoly) -> MultiPoly:
        return normal_form(p, self)

    def contains(self, p: MultiPoly) -> bool:
        return normal_form(p, self).is_zero

    def ideal(self) -> Ideal:
        return Ideal(self.basis, self.variables)

    def __iter__(self):
        return iter(self.basis)

    def __len__(self) -> int:
        return len(self.basis)


def _reduce(
    p: MultiPoly, divisors: Sequence[MultiPoly], leads: Sequence[Tuple[Monomial, object]], order: MonomialOrder
) -> MultiPoly:
    """Full multivariate division remainder of ``p`` by ``divisors``."""
    remainder: Dict[Monomial, object] = {}
    while not p.is_zero:
        m, c = p.leading_term(order)
        for g, (lm, lc) in zip(divisors, leads):
            q = mono_div(m, lm)
            if q is not None:
                p = p - g.mul_term(q, c / lc)
                break
        else:
            remainder[m] = c
            p = p - MultiPoly(p.variables, {m: c})
    return MultiPoly(p.variables, remainder)


def normal_form(
    p: MultiPoly,
    gb: Union[GroebnerBasis, Sequence[MultiPoly]],
    order: Optional[MonomialOrder] = None,
) -> MultiPoly:
    """Remainder of ``p`` on division by a basis; zero iff ``p`` lies in the ideal."""
    if isinstance(gb, GroebnerBasis):
        order = gb.order
        divisors = list(gb.basis)
    else:
        divisors = [g for g in gb if not g.is_zero]
        order = order or grevlex(p.variables)
    if divisors and divisors[0].variables != p.variables:
        raise DomainError(f"ring mismatch: {p.variables} vs {divisors[0].variables}")
    leads = [g.leading_term(order) for g in divisors]
    return _reduce(p, divisors, leads, order)


def spoly(f: MultiPoly, g: MultiPoly, order: MonomialOrder) -> MultiPoly:
    """S-polynomial of monic ``f`` and ``g``."""
    lmf = f.leading_monomial(order)
    lmg = g.leading_monomial(order)
    lcm = mono_lcm(lmf, lmg)
    return f.mul_term(mono_div(lcm, lmf)) - g.mul_term(mono_div(lcm, lmg))


def _select(lms: Sequence[Monomial], pairs: Set[Pair], order: MonomialOrder) -> Pair:
    return min(pairs, key=lambda p: (order.key(mono_lcm(lms[p[0]], lms[p[1]])), p))


def _update(
    lms: List[Monomial], pairs: Set[Pair], lmf: Monomial, order: MonomialOrder
) -> Set[Pair]:
    """Gebauer-Moeller update of the pair set when a polynomial with leading monomial ``lmf`` joins."""
    new_index = len(lms)
    lcm = mono_lcm
    kept = {
        (i, j)
        for (i, j) in pairs
        if not mono_divides(lmf, lcm(lms[i], lms[j]))
        or lcm(lms[i], lms[j]) == lcm(lms[i], lmf)
        or lcm(lms[i], lms[j]) == lcm(lms[j], lmf)
    }
    by_lcm: Dict[Monomial, List[int]] = {}
    for i, lm in enumerate(lms):
        by_lcm.setdefault(lcm(lm, lmf), []).append(i)
    minimal: List[Monomial] = []
    for L in sorted(by_lcm, key=order.key):
        if all(not mono_divides(M, L) for M in minimal):
            minimal.append(L)
    for L in minimal:
        # coprime leading monomials: the pair reduces to zero
        if not any(lcm(lms[i], lmf) == mono_mul(lms[i], lmf) for i in by_lcm[L]):
            kept.add((min(by_lcm[L]), new_index))
    return kept


def _minimalize(G: List[MultiPoly], order: MonomialOrder) -> List[MultiPoly]:
    out: List[MultiPoly] = []
    for f in sorted(G, key=lambda h: order.key(h.leading_monomial(order))):
        lm = f.leading_monomial(order)
        if all(not mono_divides(g.leading_monomial(order), lm) for g in out):
            out.append(f)
    return out


def _interreduce(G: List[MultiPoly], order: MonomialOrder) -> List[MultiPoly]:
    out = []
    for i, g in enumerate(G):
        others = G[:i] + G[i + 1:]
        out.append(normal_form(g, others, order).monic(order))
    return out


def groebner_basis(
    ideal: Union[Ideal, Iterable[MultiPoly]],
    order: Optional[MonomialOrder] = None,
    pair_budget: Optional[int] = None,
) -> GroebnerBasis:
    """Reduced Groebner basis of ``ideal`` for ``order`` (grevlex by default).

    Raises:
        BudgetExceededError: if more than ``pair_budget`` S-pairs are processed.
    """
    if not isinstance(ideal, Ideal):
        ideal = Ideal(list(ideal))
    variables = ideal.variables
    order = order or grevlex(variables)
    budget = GROEBNER_PAIR_BUDGET if pair_budget is None else pair_budget

    G: List[MultiPoly] = []
    lms: List[Monomial] = []
    pairs: Set[Pair] = set()
    for f in ideal.generators:
        f = f.monic(order)
        lmf = f.leading_monomial(order)
        pairs = _update(lms, pairs, lmf, order)
        G.append(f)
        lms.append(lmf)

    processed = 0
    while pairs:
        processed += 1
        if processed > budget:
            raise BudgetExceededError(f"Groebner basis needed more than {budget} S-pairs")
        i, j = _select(lms, pairs, order)
        pairs.remove((i, j))
        r = normal_form(spoly(G[i], G[j], order), G, order)
        if not r.is_zero:
            r = r.monic(order)
            lmr = r.leading_monomial(order)
            pairs = _update(lms, pairs, lmr, order)
            G.append(r)
            lms.append(lmr)
            if r.is_constant:
                break

    if any(g.is_constant for g in G):
        basis = [MultiPoly.constant(variables, 1)]
    else:
        basis = _interreduce(_minimalize(G, order), order)
        basis.sort(key=lambda g: order.key(g.leading_monomial(order)))
    logger.debug(
        "groebner basis: %d generators -> %d elements after %d pairs (%s)",
        len(ideal.generators),
        len(basis),
        processed,
        order.describe(variables),
    )
    return GroebnerBasis(variables, order, tuple(basis))
