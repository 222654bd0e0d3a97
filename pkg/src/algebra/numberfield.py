"""Arithmetic in simple number fields ℚ(α) = ℚ[t]/(m(t)).

Elements are immutable; every operation returns the canonical representative
of degree < deg m.  Mixed arithmetic with `int` and `Fraction` coerces into the
field, so univariate and multivariate helpers can treat ℚ and ℚ(α) alike.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Tuple, Union

from ..errors import DomainError, UnsupportedFieldError
from . import univariate as up

Scalar = Union[int, Fraction]


def _as_fraction_tuple(coeffs: Sequence[Scalar]) -> Tuple[Fraction, ...]:
    return tuple(Fraction(c) for c in coeffs)


@dataclass(frozen=True)
class NumberField:
    """ℚ(α) given by the monic irreducible minimal polynomial of α (constant term first)."""

    minimal_polynomial: Tuple[Fraction, ...]
    name: str = field(default="a", compare=False)

    def __post_init__(self) -> None:
        mp = up.trim(_as_fraction_tuple(self.minimal_polynomial))
        if len(mp) < 2:
            raise DomainError("minimal polynomial must have degree >= 1")
        if mp[-1] != 1:
            raise DomainError("minimal polynomial must be monic")
        object.__setattr__(self, "minimal_polynomial", tuple(mp))

    @property
    def degree(self) -> int:
        return len(self.minimal_polynomial) - 1

    @property
    def zero(self) -> "NumberFieldElement":
        return NumberFieldElement(self, ())

    @property
    def one(self) -> "NumberFieldElement":
        return NumberFieldElement(self, (Fraction(1),))

    @property
    def generator(self) -> "NumberFieldElement":
        return self.element([0, 1])

    def element(self, coeffs: Sequence[Scalar]) -> "NumberFieldElement":
        return extfield_reduce(NumberFieldElement(self, _as_fraction_tuple(coeffs)))

    def convert(self, value: Union[Scalar, "NumberFieldElement"]) -> "NumberFieldElement":
        if isinstance(value, NumberFieldElement):
            if value.field != self:
                raise UnsupportedFieldError(
                    "mixing elements of different number fields", kind="extension tower unsupported"
                )
            return value
        return NumberFieldElement(self, tuple(up.trim((Fraction(value),))))

    def __str__(self) -> str:
        return f"Q({self.name}), {up.to_string(self.minimal_polynomial, self.name)} = 0"


@dataclass(frozen=True)
class NumberFieldElement:
    field: NumberField
    coeffs: Tuple[Fraction, ...]

    # -- helpers -----------------------------------------------------------
    def _coerce(self, other: object) -> "NumberFieldElement | None":
        if isinstance(other, NumberFieldElement):
            return self.field.convert(other)
        if isinstance(other, (int, Fraction)):
            return self.field.convert(other)
        return None

    @property
    def is_rational(self) -> bool:
        return len(self.coeffs) <= 1

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise DomainError(f"{self} is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other: object) -> "NumberFieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NumberFieldElement(self.field, tuple(up.add(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "NumberFieldElement":
        return NumberFieldElement(self.field, tuple(-c for c in self.coeffs))

    def __sub__(self, other: object) -> "NumberFieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NumberFieldElement(self.field, tuple(up.sub(self.coeffs, o.coeffs)))

    def __rsub__(self, other: object) -> "NumberFieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> "NumberFieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return extfield_reduce(NumberFieldElement(self.field, tuple(up.mul(self.coeffs, o.coeffs))))

    __rmul__ = __mul__

    def inverse(self) -> "NumberFieldElement":
        if not self.coeffs:
            raise DomainError("inversion of zero in a number field")
        g, s, _ = up.ext_gcd(list(self.coeffs), list(self.field.minimal_polynomial))
        if len(g) != 1:
            raise DomainError("element is a zero divisor: minimal polynomial is not irreducible")
        return extfield_reduce(NumberFieldElement(self.field, tuple(s)))

    def __truediv__(self, other: object) -> "NumberFieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> "NumberFieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> "NumberFieldElement":
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparisons -------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, NumberFieldElement):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == tuple(up.trim((Fraction(other),)))
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational:
            return hash(self.as_fraction())
        return hash((self.field, self.coeffs))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        if self.is_rational:
            return str(self.coeffs[0])
        return up.to_string(self.coeffs, self.field.name)

    __repr__ = __str__


def extfield_reduce(e: NumberFieldElement) -> NumberFieldElement:
    """Canonical representative of ``e`` modulo the minimal polynomial."""
    coeffs = up.trim(e.coeffs)
    if len(coeffs) >= len(e.field.minimal_polynomial):
        coeffs = up.rem(coeffs, list(e.field.minimal_polynomial))
    return NumberFieldElement(e.field, tuple(coeffs))
