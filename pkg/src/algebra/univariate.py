"""Dense univariate polynomial helpers over an exact field.

Polynomials are lists of coefficients from the constant term upwards.  The
coefficients may be `fractions.Fraction` or `NumberFieldElement`; every helper
only uses field arithmetic, so the same code serves ℚ and ℚ(α).  The zero
polynomial is the empty list.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, List, Sequence, Tuple

Coeff = Any
Dense = List[Coeff]


def trim(p: Sequence[Coeff]) -> Dense:
    out = list(p)
    while out and not out[-1]:
        out.pop()
    return out


def degree(p: Sequence[Coeff]) -> int:
    """Degree of a trimmed polynomial; -1 for zero."""
    return len(trim(p)) - 1


def _zero_like(c: Coeff) -> Coeff:
    return c - c


def _one_like(c: Coeff) -> Coeff:
    return c / c


def add(a: Sequence[Coeff], b: Sequence[Coeff]) -> Dense:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return trim(out)


def neg(a: Sequence[Coeff]) -> Dense:
    return [-c for c in a]


def sub(a: Sequence[Coeff], b: Sequence[Coeff]) -> Dense:
    return add(a, neg(b))


def scale(a: Sequence[Coeff], c: Coeff) -> Dense:
    return trim([x * c for x in a])


def mul(a: Sequence[Coeff], b: Sequence[Coeff]) -> Dense:
    a, b = trim(a), trim(b)
    if not a or not b:
        return []
    zero = _zero_like(a[0] * b[0])
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return trim(out)


def power(a: Sequence[Coeff], n: int) -> Dense:
    result: Dense = [Fraction(1)]
    base = trim(a)
    while n:
        if n & 1:
            result = mul(result, base)
        base = mul(base, base)
        n >>= 1
    return result


def divmod_(a: Sequence[Coeff], b: Sequence[Coeff]) -> Tuple[Dense, Dense]:
    """Euclidean division ``a = q*b + r`` with ``deg r < deg b``."""
    a, b = trim(a), trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    if len(r) < len(b):
        return [], r
    lead = b[-1]
    q = [_zero_like(lead)] * (len(r) - len(b) + 1)
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        factor = r[-1] / lead
        q[shift] = factor
        for i, c in enumerate(b):
            r[i + shift] = r[i + shift] - factor * c
        r.pop()
        r = trim(r)
    return trim(q), r


def rem(a: Sequence[Coeff], b: Sequence[Coeff]) -> Dense:
    return divmod_(a, b)[1]


def monic(a: Sequence[Coeff]) -> Dense:
    a = trim(a)
    if not a:
        return []
    inv = _one_like(a[-1]) / a[-1]
    return [c * inv for c in a]


def gcd(a: Sequence[Coeff], b: Sequence[Coeff]) -> Dense:
    """Monic greatest common divisor (zero if both inputs are zero)."""
    a, b = trim(a), trim(b)
    while b:
        a, b = b, rem(a, b)
    return monic(a)


def ext_gcd(a: Sequence[Coeff], b: Sequence[Coeff]) -> Tuple[Dense, Dense, Dense]:
    """Return ``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` monic."""
    a, b = trim(a), trim(b)
    sample = (a or b)[-1]
    one = _one_like(sample)
    r0, r1 = a, b
    s0, s1 = [one], []
    t0, t1 = [], [one]
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    if not r0:
        return [], [], []
    inv = one / r0[-1]
    return scale(r0, inv), scale(s0, inv), scale(t0, inv)


def derivative(a: Sequence[Coeff]) -> Dense:
    return trim([c * i for i, c in enumerate(a)][1:])


def evaluate(a: Sequence[Coeff], x: Coeff) -> Coeff:
    acc = _zero_like(x)
    for c in reversed(trim(a)):
        acc = acc * x + c
    return acc


def shift(a: Sequence[Coeff], c: Coeff) -> Dense:
    """Return ``a(z + c)`` by Horner's scheme."""
    out: Dense = []
    for coeff in reversed(trim(a)):
        out = add(mul(out, [c, Fraction(1)]), [coeff])
    return out


def squarefree_part(a: Sequence[Coeff]) -> Dense:
    a = monic(a)
    if len(a) <= 1:
        return a
    g = gcd(a, derivative(a))
    return monic(divmod_(a, g)[0])


def squarefree_decomposition(a: Sequence[Coeff]) -> List[Tuple[Dense, int]]:
    """Yun's algorithm: monic squarefree coprime factors with their multiplicities."""
    a = monic(a)
    if len(a) <= 1:
        return []
    out: List[Tuple[Dense, int]] = []
    da = derivative(a)
    g = gcd(a, da)
    b = divmod_(a, g)[0]
    c = divmod_(da, g)[0]
    d = sub(c, derivative(b))
    k = 1
    while degree(b) > 0:
        g = gcd(b, d)
        b = divmod_(b, g)[0]
        c = divmod_(d, g)[0]
        d = sub(c, derivative(b))
        if degree(g) > 0:
            out.append((monic(g), k))
        k += 1
    return out


def to_string(a: Sequence[Coeff], var: str = "z") -> str:
    a = trim(a)
    if not a:
        return "0"
    parts = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if i == 0:
            parts.append(f"({c})")
        else:
            parts.append(f"({c})*{mono}")
    return " + ".join(parts)
