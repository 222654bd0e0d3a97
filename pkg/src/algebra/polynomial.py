"""Sparse exact multivariate polynomials.

A `MultiPoly` is a map from exponent tuples to nonzero coefficients.  The
coefficients are `fractions.Fraction` (integers are promoted on entry) or
`NumberFieldElement` values of a single simple extension.  Values are
immutable: every operation returns a new polynomial.

Monomial orders are small objects exposing ``key(monomial)``; the leading term
of a polynomial is the term whose key is largest.  Storage and printing use
graded reverse lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from ..errors import DomainError
from .numberfield import NumberField, NumberFieldElement

Monomial = Tuple[int, ...]
Coefficient = Union[Fraction, NumberFieldElement]
ScalarLike = Union[int, Fraction, NumberFieldElement]


# ---------------------------------------------------------------------------
# Monomial helpers
# ---------------------------------------------------------------------------

def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(i + j for i, j in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True when ``a`` divides ``b``."""
    return all(i <= j for i, j in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Optional[Monomial]:
    """Return ``a / b`` or None when ``b`` does not divide ``a``."""
    q = tuple(i - j for i, j in zip(a, b))
    if any(e < 0 for e in q):
        return None
    return q


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(i, j) for i, j in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


# ---------------------------------------------------------------------------
# Monomial orders
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order on a fixed number of variables.

    ``priority`` lists variable indices from largest to smallest.  ``weights``
    is only used by the weighted graded order.
    """

    kind: str
    priority: Tuple[int, ...]
    weights: Tuple[int, ...] = ()

    def key(self, m: Monomial) -> tuple:
        if self.kind == "lex":
            return tuple(m[i] for i in self.priority)
        tail = tuple(-m[i] for i in reversed(self.priority))
        if self.kind == "grevlex":
            return (sum(m),) + tail
        if self.kind == "wgrevlex":
            wdeg = sum(w * e for w, e in zip(self.weights, m))
            return (wdeg, sum(m)) + tail
        raise DomainError(f"unknown monomial order {self.kind!r}")

    def weighted_degree(self, m: Monomial) -> int:
        if self.weights:
            return sum(w * e for w, e in zip(self.weights, m))
        return sum(m)

    def describe(self, variables: Sequence[str]) -> str:
        names = " > ".join(variables[i] for i in self.priority)
        if self.kind == "wgrevlex":
            return f"wgrevlex({names}; weights={list(self.weights)})"
        return f"{self.kind}({names})"


def lex(variables: Sequence[str], ranking: Optional[Sequence[str]] = None) -> MonomialOrder:
    """Lexicographic order; ``ranking`` lists variable names from largest to smallest."""
    ranking = list(variables) if ranking is None else list(ranking)
    return MonomialOrder("lex", tuple(list(variables).index(v) for v in ranking))


def grevlex(variables: Sequence[str]) -> MonomialOrder:
    return MonomialOrder("grevlex", tuple(range(len(variables))))


def weighted_grevlex(variables: Sequence[str], weights: Sequence[int]) -> MonomialOrder:
    if len(weights) != len(variables) or any(w <= 0 for w in weights):
        raise DomainError("weights must be positive, one per variable")
    return MonomialOrder("wgrevlex", tuple(range(len(variables))), tuple(int(w) for w in weights))


# ---------------------------------------------------------------------------
# Coefficients
# ---------------------------------------------------------------------------

def coerce_coefficient(c: ScalarLike) -> Coefficient:
    if isinstance(c, NumberFieldElement):
        return c
    if isinstance(c, bool):
        raise DomainError("booleans are not polynomial coefficients")
    if isinstance(c, (int, Fraction)):
        return Fraction(c)
    raise DomainError(f"unsupported coefficient type {type(c).__name__}")


def format_coefficient(c: Coefficient) -> str:
    if isinstance(c, NumberFieldElement):
        return f"({c})" if not c.is_rational else format_coefficient(c.as_fraction())
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


# ---------------------------------------------------------------------------
# MultiPoly
# ---------------------------------------------------------------------------

class MultiPoly:
    """Sparse polynomial in a fixed, ordered list of variables."""

    __slots__ = ("_variables", "_terms", "_hash")

    def __init__(
        self,
        variables: Sequence[str],
        terms: Optional[Mapping[Monomial, ScalarLike]] = None,
    ) -> None:
        self._variables: Tuple[str, ...] = tuple(variables)
        n = len(self._variables)
        clean: Dict[Monomial, Coefficient] = {}
        for mono, c in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != n or any(e < 0 for e in mono):
                raise DomainError(f"monomial {mono} does not fit ring {self._variables}")
            c = coerce_coefficient(c)
            if c:
                clean[mono] = c
        self._terms = clean
        self._hash: Optional[int] = None

    # -- constructors ------------------------------------------------------
    @classmethod
    def zero(cls, variables: Sequence[str]) -> "MultiPoly":
        return cls(variables)

    @classmethod
    def constant(cls, variables: Sequence[str], c: ScalarLike) -> "MultiPoly":
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def variable(cls, variables: Sequence[str], name: str) -> "MultiPoly":
        if name not in variables:
            raise DomainError(f"unknown variable {name!r}")
        exps = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {exps: 1})

    @classmethod
    def from_univariate(
        cls, variables: Sequence[str], name: str, coeffs: Sequence[ScalarLike]
    ) -> "MultiPoly":
        """Build ``Σ coeffs[k] * name^k`` (coefficients from the constant term up)."""
        idx = list(variables).index(name)
        terms = {}
        for k, c in enumerate(coeffs):
            exps = [0] * len(variables)
            exps[idx] = k
            terms[tuple(exps)] = c
        return cls(variables, terms)

    # -- basic accessors ---------------------------------------------------
    @property
    def variables(self) -> Tuple[str, ...]:
        return self._variables

    @property
    def nvars(self) -> int:
        return len(self._variables)

    @property
    def terms(self) -> Dict[Monomial, Coefficient]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, Coefficient]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self._terms)

    def constant_term(self) -> Coefficient:
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def coefficient(self, mono: Monomial) -> Coefficient:
        return self._terms.get(tuple(mono), Fraction(0))

    @property
    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def degree_in(self, name: str) -> int:
        i = self._index(name)
        return max((m[i] for m in self._terms), default=-1)

    def weighted_degree(self, weights: Sequence[int]) -> int:
        return max((sum(w * e for w, e in zip(weights, m)) for m in self._terms), default=-1)

    def used_variables(self) -> Tuple[str, ...]:
        used = [False] * self.nvars
        for m in self._terms:
            for i, e in enumerate(m):
                if e:
                    used[i] = True
        return tuple(v for v, u in zip(self._variables, used) if u)

    def coefficient_field(self) -> Optional[NumberField]:
        """The number field of the coefficients, or None for rational polynomials."""
        for c in self._terms.values():
            if isinstance(c, NumberFieldElement) and not c.is_rational:
                return c.field
        return None

    def is_rational(self) -> bool:
        return self.coefficient_field() is None

    def _index(self, name: str) -> int:
        try:
            return self._variables.index(name)
        except ValueError:
            raise DomainError(f"variable {name!r} not in ring {self._variables}") from None

    # -- ordering ----------------------------------------------------------
    def sorted_terms(self, order: Optional[MonomialOrder] = None) -> List[Tuple[Monomial, Coefficient]]:
        """Terms in decreasing order (graded reverse lexicographic by default)."""
        order = order or grevlex(self._variables)
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_term(self, order: Optional[MonomialOrder] = None) -> Tuple[Monomial, Coefficient]:
        if not self._terms:
            raise DomainError("the zero polynomial has no leading term")
        order = order or grevlex(self._variables)
        mono = max(self._terms, key=order.key)
        return mono, self._terms[mono]

    def leading_monomial(self, order: Optional[MonomialOrder] = None) -> Monomial:
        return self.leading_term(order)[0]

    def leading_coefficient(self, order: Optional[MonomialOrder] = None) -> Coefficient:
        return self.leading_term(order)[1]

    # -- arithmetic --------------------------------------------------------
    def _check_ring(self, other: "MultiPoly") -> None:
        if other._variables != self._variables:
            raise DomainError(f"ring mismatch: {self._variables} vs {other._variables}")

    def _lift(self, other: object) -> Optional["MultiPoly"]:
        if isinstance(other, MultiPoly):
            self._check_ring(other)
            return other
        if isinstance(other, (int, Fraction, NumberFieldElement)) and not isinstance(other, bool):
            return MultiPoly.constant(self._variables, other)
        return None

    def __add__(self, other: object) -> "MultiPoly":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for m, c in o._terms.items():
            out[m] = out[m] + c if m in out else c
        return MultiPoly(self._variables, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self._variables, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: object) -> "MultiPoly":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "MultiPoly":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check_ring(other)
            out: Dict[Monomial, Coefficient] = {}
            for m1, c1 in self._terms.items():
                for m2, c2 in other._terms.items():
                    m = mono_mul(m1, m2)
                    out[m] = out[m] + c1 * c2 if m in out else c1 * c2
            return MultiPoly(self._variables, out)
        if isinstance(other, (int, Fraction, NumberFieldElement)) and not isinstance(other, bool):
            c = coerce_coefficient(other)
            return MultiPoly(self._variables, {m: v * c for m, v in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "MultiPoly":
        if isinstance(other, (int, Fraction, NumberFieldElement)) and not isinstance(other, bool):
            if not other:
                raise DomainError("division of a polynomial by zero")
            inv = Fraction(1) / coerce_coefficient(other)
            return self * inv
        if isinstance(other, MultiPoly):
            return self.exact_div(other)
        return NotImplemented

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise DomainError("negative powers of polynomials are not polynomials")
        result = MultiPoly.constant(self._variables, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def mul_term(self, mono: Monomial, c: ScalarLike = 1) -> "MultiPoly":
        c = coerce_coefficient(c)
        return MultiPoly(self._variables, {mono_mul(m, mono): v * c for m, v in self._terms.items()})

    def exact_div(self, divisor: "MultiPoly") -> "MultiPoly":
        """Quotient of an exact division; raises DomainError when a remainder is left."""
        self._check_ring(divisor)
        if divisor.is_zero:
            raise DomainError("division by the zero polynomial")
        order = grevlex(self._variables)
        lm, lc = divisor.leading_term(order)
        rem = self
        quotient: Dict[Monomial, Coefficient] = {}
        while not rem.is_zero:
            m, c = rem.leading_term(order)
            q = mono_div(m, lm)
            if q is None:
                raise DomainError("polynomial division is not exact")
            qc = c / lc
            quotient[q] = qc
            rem = rem - divisor.mul_term(q, qc)
        return MultiPoly(self._variables, quotient)

    # -- calculus and substitution -----------------------------------------
    def derivative(self, name: str) -> "MultiPoly":
        i = self._index(name)
        out = {}
        for m, c in self._terms.items():
            if m[i]:
                nm = list(m)
                nm[i] -= 1
                out[tuple(nm)] = c * m[i]
        return MultiPoly(self._variables, out)

    def gradient(self) -> List["MultiPoly"]:
        return [self.derivative(v) for v in self._variables]

    def substitute(self, images: Mapping[str, Union["MultiPoly", ScalarLike]]) -> "MultiPoly":
        """Replace variables by polynomials of the same ring (or scalars)."""
        targets: Dict[int, MultiPoly] = {}
        for name, img in images.items():
            i = self._index(name)
            if isinstance(img, MultiPoly):
                self._check_ring(img)
                targets[i] = img
            else:
                targets[i] = MultiPoly.constant(self._variables, img)
        powers: Dict[Tuple[int, int], MultiPoly] = {}

        def power(i: int, e: int) -> MultiPoly:
            key = (i, e)
            if key not in powers:
                powers[key] = targets[i] ** e
            return powers[key]

        result = MultiPoly.zero(self._variables)
        for m, c in self._terms.items():
            kept = tuple(0 if i in targets else e for i, e in enumerate(m))
            term = MultiPoly(self._variables, {kept: c})
            for i, e in enumerate(m):
                if i in targets and e:
                    term = term * power(i, e)
            result = result + term
        return result

    def translate(self, shifts: Mapping[str, ScalarLike]) -> "MultiPoly":
        """Return ``f(v + shifts[v])``; moves the point ``shifts`` to the origin."""
        images = {
            name: MultiPoly.variable(self._variables, name) + shift
            for name, shift in shifts.items()
            if shift
        }
        return self.substitute(images) if images else self

    def specialize(self, values: Mapping[str, ScalarLike]) -> "MultiPoly":
        """Evaluate the named variables and drop them from the ring."""
        idx = {self._index(name): coerce_coefficient(v) for name, v in values.items()}
        keep = [i for i in range(self.nvars) if i not in idx]
        out: Dict[Monomial, Coefficient] = {}
        for m, c in self._terms.items():
            for i, v in idx.items():
                if m[i]:
                    c = c * v ** m[i]
            nm = tuple(m[i] for i in keep)
            out[nm] = out[nm] + c if nm in out else c
        return MultiPoly([self._variables[i] for i in keep], out)

    def evaluate(self, values: Mapping[str, ScalarLike]) -> Coefficient:
        if set(values) != set(self._variables):
            raise DomainError("evaluate needs a value for every variable")
        return self.specialize(values).constant_term()

    def with_variables(self, variables: Sequence[str]) -> "MultiPoly":
        """Re-embed into a ring whose variables contain every used variable."""
        variables = tuple(variables)
        for v in self.used_variables():
            if v not in variables:
                raise DomainError(f"variable {v!r} missing from target ring {variables}")
        pos = {v: i for i, v in enumerate(self._variables)}
        out = {}
        for m, c in self._terms.items():
            out[tuple(m[pos[v]] if v in pos else 0 for v in variables)] = c
        return MultiPoly(variables, out)

    def rename(self, mapping: Mapping[str, str]) -> "MultiPoly":
        return MultiPoly([mapping.get(v, v) for v in self._variables], self._terms)

    def map_coefficients(self, fn: Callable[[Coefficient], ScalarLike]) -> "MultiPoly":
        return MultiPoly(self._variables, {m: fn(c) for m, c in self._terms.items()})

    # -- homogeneity -------------------------------------------------------
    def homogenize(self, name: str = "z") -> "MultiPoly":
        if name in self._variables:
            raise DomainError(f"homogenizing variable {name!r} already in the ring")
        d = self.total_degree
        return MultiPoly(
            self._variables + (name,), {m + (d - sum(m),): c for m, c in self._terms.items()}
        )

    def top_form(self) -> "MultiPoly":
        """Homogeneous component of highest total degree."""
        d = self.total_degree
        return MultiPoly(self._variables, {m: c for m, c in self._terms.items() if sum(m) == d})

    def weighted_top_form(self, weights: Sequence[int]) -> "MultiPoly":
        d = self.weighted_degree(weights)
        return MultiPoly(
            self._variables,
            {m: c for m, c in self._terms.items() if sum(w * e for w, e in zip(weights, m)) == d},
        )

    def is_weighted_homogeneous(self, weights: Sequence[int]) -> bool:
        degrees = {sum(w * e for w, e in zip(weights, m)) for m in self._terms}
        return len(degrees) <= 1

    def order_at_origin(self) -> int:
        """Lowest total degree of a term; -1 for zero."""
        return min((sum(m) for m in self._terms), default=-1)

    # -- univariate views --------------------------------------------------
    def univariate_coeffs(self, name: str) -> List["MultiPoly"]:
        """Coefficients ``c_k`` (free of ``name``) with ``self = Σ c_k name^k``."""
        i = self._index(name)
        d = self.degree_in(name)
        buckets: List[Dict[Monomial, Coefficient]] = [{} for _ in range(d + 1)]
        for m, c in self._terms.items():
            nm = m[:i] + (0,) + m[i + 1:]
            buckets[m[i]][nm] = c
        return [MultiPoly(self._variables, b) for b in buckets]

    def as_univariate(self, name: Optional[str] = None) -> List[Coefficient]:
        """Dense coefficient list, constant term first, when only ``name`` occurs."""
        used = self.used_variables()
        if name is None:
            if len(used) > 1:
                raise DomainError(f"{self} is not univariate")
            name = used[0] if used else self._variables[0]
        if any(v != name for v in used):
            raise DomainError(f"{self} involves variables other than {name}")
        i = self._index(name)
        d = self.degree_in(name)
        out: List[Coefficient] = [Fraction(0)] * (d + 1)
        for m, c in self._terms.items():
            out[m[i]] = c
        return out

    # -- normalization -----------------------------------------------------
    def content(self) -> Fraction:
        """Positive rational content (gcd of numerators over lcm of denominators)."""
        if not self.is_rational():
            raise DomainError("content is only defined for rational polynomials")
        nums = 0
        dens = 1
        for c in self._terms.values():
            c = c.as_fraction() if isinstance(c, NumberFieldElement) else c
            nums = gcd(nums, c.numerator)
            dens = lcm(dens, c.denominator)
        return Fraction(nums, dens) if nums else Fraction(0)

    def normalized(self) -> "MultiPoly":
        """Content 1 with a positive grevlex-leading coefficient (monic over ℚ(α))."""
        if self.is_zero:
            return self
        if not self.is_rational():
            return self.monic()
        p = self / self.content()
        p = p.map_coefficients(lambda c: c.as_fraction() if isinstance(c, NumberFieldElement) else c)
        if p.leading_coefficient() < 0:
            p = -p
        return p

    def monic(self, order: Optional[MonomialOrder] = None) -> "MultiPoly":
        if self.is_zero:
            return self
        return self * (Fraction(1) / self.leading_coefficient(order))

    # -- comparison and printing --------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiPoly):
            return self._variables == other._variables and self._terms == other._terms
        if isinstance(other, (int, Fraction, NumberFieldElement)) and not isinstance(other, bool):
            return self == MultiPoly.constant(self._variables, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._variables, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: List[str] = []
        for m, c in self.sorted_terms():
            if isinstance(c, NumberFieldElement) and c.is_rational:
                c = c.as_fraction()
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self._variables, m) if e
            )
            negative = not isinstance(c, NumberFieldElement) and c < 0
            mag = -c if negative else c
            coef = format_coefficient(mag)
            if mono and coef == "1":
                body = mono
            elif mono:
                body = f"{coef}*{mono}"
            else:
                body = coef
            if not pieces:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f" - {body}" if negative else f" + {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"MultiPoly({', '.join(self._variables)}: {self})"


def polynomial_ring(variables: Sequence[str]) -> Tuple[MultiPoly, ...]:
    """Generators of ℚ[variables], handy for building polynomials in code."""
    return tuple(MultiPoly.variable(variables, v) for v in variables)


def common_ring(polys: Iterable[MultiPoly]) -> Tuple[str, ...]:
    polys = list(polys)
    if not polys:
        raise DomainError("empty polynomial list")
    ring = polys[0].variables
    for p in polys[1:]:
        if p.variables != ring:
            raise DomainError(f"ring mismatch: {ring} vs {p.variables}")
    return ring
