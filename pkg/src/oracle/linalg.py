"""Exact ranks of sparse rational matrices.

Rows are dictionaries ``{column: coefficient}``.  Elimination runs on sympy's
sparse ``DomainMatrix`` over ``QQ``, which is fraction-free internally.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from ..errors import DomainError

Row = Dict[int, Fraction]


def _qq(c) -> object:
    if not isinstance(c, (int, Fraction)):
        raise DomainError(f"oracle matrices are rational, got coefficient {c}")
    c = Fraction(c)
    return QQ(c.numerator, c.denominator)


def domain_matrix(rows: Sequence[Row], ncols: int) -> DomainMatrix:
    """Sparse ``DomainMatrix`` of the nonzero rows."""
    data: Dict[int, Dict[int, object]] = {}
    for row in rows:
        entries = {j: _qq(c) for j, c in row.items() if c}
        if entries:
            data[len(data)] = entries
    return DomainMatrix(data, (len(data), ncols), QQ)


def pivot_columns(rows: Sequence[Row], ncols: int) -> Tuple[int, ...]:
    """Pivot columns of the reduced row echelon form.

    For every prefix of the column order, the number of pivots inside the
    prefix is the rank of that column block.
    """
    if ncols == 0 or not any(any(r.values()) for r in rows):
        return ()
    _, pivots = domain_matrix(rows, ncols).rref()
    return tuple(sorted(pivots))


def rank(rows: Sequence[Row], ncols: int) -> int:
    if ncols == 0 or not any(any(r.values()) for r in rows):
        return 0
    return domain_matrix(rows, ncols).rank()


def count_below(pivots: Sequence[int], limit: int) -> int:
    """Number of pivots in the leading ``limit`` columns."""
    return sum(1 for p in pivots if p < limit)


def add_to_row(row: Row, column: int, c: Fraction) -> None:
    value = row.get(column, 0) + c
    if value:
        row[column] = value
    else:
        row.pop(column, None)
