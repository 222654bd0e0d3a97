"""Truncated-degree computation of ``dim Ω¹(A)/dA`` and of local μ′.

``Ω¹(A)`` is the free module on ``dx₁..dxₙ`` over ``A`` modulo ``A·dρ`` for the
relations ``ρ``.  Elements are written in the monomial basis of ``A`` (the
standard monomials of a weighted-grevlex basis), so a 1-form becomes a sparse
row indexed by pairs ``(standard monomial, i)``.

Graded presentations are handled degree by degree and every increment is
exact.  Above ``2·Σ deg ρ`` the increments must vanish; a nonzero one there
raises ``OracleError``.  Filtered presentations use one matrix over a range of
degrees and only report window stability.
"""

from __future__ import annotations

import bisect
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..algebra.polynomial import Monomial, MultiPoly
from ..config import DEFAULT_DEGREE_BOUND, ORACLE_SLACK, ORACLE_WINDOW
from ..errors import DomainError, NotACurvePresentationError, OracleError
from ..groebner.buchberger import GroebnerBasis, normal_form
from ..groebner.staircase import monomials_of_weighted_degree, standard_monomials_of_degree
from .linalg import Row, add_to_row, count_below, pivot_columns, rank
from .presentation import AlgebraPresentation

logger = logging.getLogger(__name__)

Column = Tuple[Monomial, int]


@dataclass(frozen=True)
class OracleResult:
    degree_bound: int
    per_degree: Tuple[Tuple[int, int], ...]
    value: int
    stabilized: bool
    stabilization_window: int
    graded: bool = True

    def __post_init__(self) -> None:
        if self.value != sum(inc for _, inc in self.per_degree):
            raise OracleError("oracle value is not the sum of its increments")


def _window_zero(increments: Sequence[int], window: int) -> bool:
    return len(increments) >= window and not any(increments[-window:])


def _certify(per_degree: List[Tuple[int, int]], bound: int, vanishing_from: int, window: int) -> bool:
    """Graded stabilization: nothing above ``vanishing_from`` and a zero trailing window."""
    for k, inc in per_degree:
        if k > vanishing_from and inc:
            raise OracleError(f"increment {inc} in degree {k} above the vanishing bound {vanishing_from}")
    return bound >= vanishing_from and _window_zero([inc for _, inc in per_degree], window)


class _FormWriter:
    """Writes polynomial 1-forms as rows over a fixed column index.

    With a Groebner basis, components are first reduced to normal form; with
    ``top`` set, terms whose column degree exceeds ``top`` are dropped.
    """

    def __init__(
        self,
        columns: Dict[Column, int],
        weights: Sequence[int],
        gb: Optional[GroebnerBasis] = None,
        top: Optional[int] = None,
    ) -> None:
        self.columns = columns
        self.weights = tuple(weights)
        self.gb = gb
        self.top = top

    def component(self, row: Row, p: MultiPoly, i: int) -> None:
        if self.gb is not None:
            p = normal_form(p, self.gb)
        for m, c in p.items():
            if self.top is not None:
                if sum(w * e for w, e in zip(self.weights, m)) + self.weights[i] > self.top:
                    continue
            add_to_row(row, self.columns[(m, i)], c)

    def single(self, p: MultiPoly, i: int) -> Row:
        """``p·dxᵢ``."""
        row: Row = {}
        self.component(row, p, i)
        return row

    def differential(self, p: MultiPoly, multiplier: Optional[Monomial] = None) -> Row:
        """``multiplier·dp``."""
        row: Row = {}
        for i, v in enumerate(p.variables):
            d = p.derivative(v)
            if d.is_zero:
                continue
            self.component(row, d.mul_term(multiplier) if multiplier else d, i)
        return row


def _index(columns: Iterable[Column]) -> Dict[Column, int]:
    return {c: j for j, c in enumerate(columns)}


def _monomial(variables: Sequence[str], m: Monomial) -> MultiPoly:
    return MultiPoly(variables, {m: 1})


def _monomials(weights: Sequence[int], degree: int) -> List[Monomial]:
    return list(monomials_of_weighted_degree(weights, degree)) if degree >= 0 else []


def _monomials_upto(weights: Sequence[int], degree: int) -> List[Monomial]:
    return [m for d in range(degree + 1) for m in _monomials(weights, d)]


def _order(p: MultiPoly, weights: Sequence[int]) -> int:
    return min(sum(w * e for w, e in zip(weights, m)) for m in p.terms)


# -- global side: A = ℚ[x]/I ------------------------------------------------

def _graded_h1(pres: AlgebraPresentation, gb: GroebnerBasis, bound: int, window: int) -> OracleResult:
    w = pres.weights
    n = len(pres.variables)
    leading = gb.leading_monomials
    gb_degrees = [g.weighted_degree(w) for g in gb.basis]

    def std(k: int) -> List[Monomial]:
        return standard_monomials_of_degree(leading, w, k) if k >= 0 else []

    per_degree: List[Tuple[int, int]] = []
    for k in range(1, bound + 1):
        columns = _index((s, i) for i in range(n) for s in std(k - w[i]))
        writer = _FormWriter(columns, w, gb)
        rows: List[Row] = []
        for g, e in zip(gb.basis, gb_degrees):
            rows.extend(writer.differential(g, a) for a in std(k - e))
        rows.extend(writer.differential(_monomial(pres.variables, s)) for s in std(k))
        coker = len(columns) - rank(rows, len(columns))
        per_degree.append((k, coker))
        logger.debug("graded oracle degree %d: %d columns, cokernel %d", k, len(columns), coker)
    stabilized = _certify(per_degree, bound, 2 * sum(pres.relation_degrees), window)
    return OracleResult(bound, tuple(per_degree), sum(c for _, c in per_degree), stabilized, window, True)


def _filtered_h1(
    pres: AlgebraPresentation, gb: GroebnerBasis, bound: int, window: int, slack: int
) -> OracleResult:
    """Filtration ``F_{≤k}`` by weighted degree of the standard-monomial basis.

    One matrix holds every row up to degree ``bound + slack``.  Columns are
    sorted by decreasing degree, so a single elimination gives the rank of
    every high-degree column block and with it ``dim (S ∩ F_{≤k})`` for all k.
    """
    w = pres.weights
    n = len(pres.variables)
    top = bound + slack
    leading = gb.leading_monomials
    std = {d: standard_monomials_of_degree(leading, w, d) for d in range(top + 1)}

    cols = [(s, i, d + w[i]) for d in range(top + 1) for s in std[d] for i in range(n) if d + w[i] <= top]
    cols.sort(key=lambda c: (-c[2], c[1], c[0]))
    columns = _index((s, i) for s, i, _ in cols)
    writer = _FormWriter(columns, w, gb)

    rows: List[Row] = []
    for g in gb.basis:
        e = g.weighted_degree(w)
        rows.extend(writer.differential(g, a) for d in range(top - e + 1) for a in std[d])
    rows.extend(writer.differential(_monomial(pres.variables, s)) for d in range(top + 1) for s in std[d])
    pivots = pivot_columns(rows, len(columns))
    total_rank = len(pivots)
    logger.info("filtered oracle: %d rows, %d columns, rank %d", len(rows), len(columns), total_rank)

    negated = [-deg for _, _, deg in cols]
    per_degree: List[Tuple[int, int]] = []
    previous = 0
    for k in range(1, bound + 1):
        high = bisect.bisect_left(negated, -k)
        h_k = (len(cols) - high) - (total_rank - count_below(pivots, high))
        per_degree.append((k, h_k - previous))
        previous = h_k
    stabilized = _window_zero([inc for _, inc in per_degree], window)
    return OracleResult(bound, tuple(per_degree), previous, stabilized, window, False)


def truncated_h1(
    pres: AlgebraPresentation,
    degree_bound: int = DEFAULT_DEGREE_BOUND,
    window: int = ORACLE_WINDOW,
    slack: int = ORACLE_SLACK,
) -> OracleResult:
    """``dim Ω¹(A)/dA`` accumulated over weighted degrees ``1..degree_bound``.

    Args:
        pres: Presentation of a one-dimensional algebra.
        degree_bound: Largest weighted degree examined.
        window: Number of trailing zero increments required for stabilization.
        slack: Extra degrees of rows used by the filtered computation.

    Returns:
        The per-degree increments, their sum and the stabilization flag.

    Raises:
        NotACurvePresentationError: if ``A`` is not one-dimensional.
        OracleError: if a graded increment is nonzero above its vanishing bound.
    """
    if degree_bound < 1:
        raise DomainError(f"degree bound must be positive, got {degree_bound}")
    gb = pres.check_curve()
    if pres.graded:
        result = _graded_h1(pres, gb, degree_bound, window)
    else:
        result = _filtered_h1(pres, gb, degree_bound, window, slack)
    logger.info(
        "truncated H1 of %s up to degree %d: %d (%s)",
        pres,
        degree_bound,
        result.value,
        "stabilized" if result.stabilized else "not stabilized",
    )
    return result


# -- local side: the completed germ at the origin -----------------------------

def _germ_rows(pres: AlgebraPresentation, writer: _FormWriter, degree: int, exact: bool) -> List[Row]:
    """Rows ``ρ·m·dxᵢ``, ``m·dρ`` and ``d(s)`` in the polynomial ring.

    With ``exact`` only rows of weighted degree ``degree`` are produced (graded
    germs); otherwise every row of order at most ``degree``.
    """
    w = pres.weights
    pick = _monomials if exact else _monomials_upto
    rows: List[Row] = []
    for rho in pres.relations:
        low = rho.weighted_degree(w) if exact else _order(rho, w)
        for i in range(len(w)):
            rows.extend(writer.single(rho.mul_term(m), i) for m in pick(w, degree - w[i] - low))
        rows.extend(writer.differential(rho, m) for m in pick(w, degree - low))
    rows.extend(writer.differential(_monomial(pres.variables, s)) for s in pick(w, degree))
    return rows


def _graded_mu_prime(pres: AlgebraPresentation, bound: int, window: int) -> OracleResult:
    w = pres.weights
    n = len(w)
    per_degree: List[Tuple[int, int]] = []
    for k in range(1, bound + 1):
        columns = _index((m, i) for i in range(n) for m in _monomials(w, k - w[i]))
        rows = _germ_rows(pres, _FormWriter(columns, w), k, exact=True)
        per_degree.append((k, len(columns) - rank(rows, len(columns))))
    stabilized = _certify(per_degree, bound, 2 * sum(pres.relation_degrees), window)
    return OracleResult(bound, tuple(per_degree), sum(c for _, c in per_degree), stabilized, window, True)


def _filtered_mu_prime(pres: AlgebraPresentation, bound: int, window: int) -> OracleResult:
    """Order filtration: ``dim F/(S + F_{>k})`` from one elimination on ascending columns."""
    w = pres.weights
    n = len(w)
    cols = [(m, i, d + w[i]) for d in range(bound + 1) for m in _monomials(w, d) for i in range(n)
            if d + w[i] <= bound]
    cols.sort(key=lambda c: (c[2], c[1], c[0]))
    columns = _index((m, i) for m, i, _ in cols)
    rows = _germ_rows(pres, _FormWriter(columns, w, top=bound), bound, exact=False)
    pivots = pivot_columns(rows, len(columns))
    logger.info("filtered germ oracle: %d rows, %d columns, rank %d", len(rows), len(columns), len(pivots))

    degrees = [deg for _, _, deg in cols]
    per_degree: List[Tuple[int, int]] = []
    previous = 0
    for k in range(1, bound + 1):
        low = bisect.bisect_right(degrees, k)
        h_k = low - count_below(pivots, low)
        per_degree.append((k, h_k - previous))
        previous = h_k
    stabilized = _window_zero([inc for _, inc in per_degree], window)
    return OracleResult(bound, tuple(per_degree), previous, stabilized, window, False)


def truncated_mu_prime(
    pres: AlgebraPresentation,
    degree_bound: int = DEFAULT_DEGREE_BOUND,
    window: int = ORACLE_WINDOW,
) -> OracleResult:
    """Local ``μ′ = dim Ω̂¹/dÔ`` of the germ of ``pres`` at the origin.

    Weighted-homogeneous germs are computed degree by degree and certified as
    in ``truncated_h1``.  Other germs are filtered by weighted order; their
    stabilization flag is a window heuristic, not a proof.

    Raises:
        NotACurvePresentationError: if a relation does not vanish at the origin
            or the presentation is not one-dimensional.
    """
    if degree_bound < 1:
        raise DomainError(f"degree bound must be positive, got {degree_bound}")
    if not pres.is_germ:
        raise NotACurvePresentationError("relations do not vanish at the origin")
    pres.check_curve()
    if pres.graded:
        result = _graded_mu_prime(pres, degree_bound, window)
    else:
        result = _filtered_mu_prime(pres, degree_bound, window)
    logger.info("truncated mu' of %s up to order %d: %d", pres, degree_bound, result.value)
    return result
