"""Line-based curve and family spec files.

::

    # comments and blank lines are ignored
    ring: x, y
    factor: y^2 - x^3
    weights: 2, 3
    tag: tame | lci | monomial(3, 4, 5)

A family file has one ``map:`` line instead of ``factor:`` lines.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import List, Optional, Tuple, Union

from ..algebra.expression import parse_polynomial
from ..algebra.polynomial import MultiPoly
from ..errors import SpecSyntaxError
from ..family.spec import FamilySpec
from ..oracle.semigroup import MonomialCurve, default_variables
from ..topology.curve import CurveSpec
from ..utils.io import read_text

IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
MONOMIAL_TAG = re.compile(r"monomial\s*\(([^)]*)\)\Z")
KEYS = ("ring", "factor", "map", "weights", "tag", "name")
PLAIN_TAGS = ("tame", "lci")

ParsedSpec = Union[CurveSpec, FamilySpec, MonomialCurve]


class _SpecReader:
    def __init__(self, name: str) -> None:
        self.name = name
        self.ring: Optional[Tuple[str, ...]] = None
        self.factors: List[MultiPoly] = []
        self.maps: List[MultiPoly] = []
        self.weights: Optional[Tuple[int, ...]] = None
        self.tags: List[str] = []
        self.generators: Optional[Tuple[int, ...]] = None
        self.last_line = 0

    def _need_ring(self, line: int) -> Tuple[str, ...]:
        if self.ring is None:
            raise SpecSyntaxError("ring not declared", line)
        return self.ring

    def _integers(self, text: str, line: int, column: int) -> Tuple[int, ...]:
        items = [s.strip() for s in text.split(",")]
        if not all(s.isdigit() for s in items):
            raise SpecSyntaxError(f"expected positive integers, got {text.strip()!r}", line, column)
        values = tuple(int(s) for s in items)
        if any(v <= 0 for v in values):
            raise SpecSyntaxError("integers must be positive", line, column)
        return values

    def feed(self, key: str, value: str, line: int, column: int) -> None:
        if key == "ring":
            if self.ring is not None:
                raise SpecSyntaxError("ring declared twice", line)
            names = tuple(s.strip() for s in value.split(","))
            bad = [n for n in names if not IDENTIFIER.match(n)]
            if bad or len(set(names)) != len(names):
                raise SpecSyntaxError(f"invalid ring declaration {value.strip()!r}", line, column)
            self.ring = names
        elif key in ("factor", "map"):
            ring = self._need_ring(line)
            p = parse_polynomial(value, ring, line=line, column_offset=column - 1)
            if p.is_zero:
                raise SpecSyntaxError("zero factor", line, column, kind="zero factor")
            if p.is_constant:
                raise SpecSyntaxError(f"constant {key}", line, column)
            (self.factors if key == "factor" else self.maps).append(p)
        elif key == "weights":
            ring = self._need_ring(line)
            weights = self._integers(value, line, column)
            if len(weights) != len(ring):
                raise SpecSyntaxError(f"{len(ring)} weights expected, got {len(weights)}", line, column)
            self.weights = weights
        elif key == "tag":
            tag = value.strip()
            match = MONOMIAL_TAG.match(tag)
            if match:
                self.generators = self._integers(match.group(1), line, column)
            elif tag in PLAIN_TAGS:
                self.tags.append(tag)
            else:
                raise SpecSyntaxError(f"unknown tag {tag!r}", line, column)
        elif key == "name":
            self.name = value.strip()

    def finish(self) -> ParsedSpec:
        end = self.last_line + 1
        if self.generators is not None:
            if self.factors or self.maps:
                raise SpecSyntaxError("a monomial curve takes no factor or map lines", end)
            ring = self.ring or default_variables(len(self.generators))
            if len(ring) != len(self.generators):
                raise SpecSyntaxError(
                    f"monomial({', '.join(map(str, self.generators))}) needs {len(self.generators)} variables",
                    end,
                )
            return MonomialCurve(tuple(ring), self.generators, self.name)
        ring = self._need_ring(end)
        if self.maps:
            if self.factors or len(self.maps) > 1:
                raise SpecSyntaxError("a family file has exactly one map line and no factors", end)
            return FamilySpec.plane(self.maps[0], self.tags, self.name)
        if not self.factors:
            raise SpecSyntaxError("no factor declared", end)
        return CurveSpec(ring, tuple(self.factors), tuple(self.tags), self.weights, self.name)


def parse_curve_spec(text: str, name: str = "") -> ParsedSpec:
    """Parse a spec document into a ``CurveSpec``, ``FamilySpec`` or ``MonomialCurve``.

    Raises:
        SpecSyntaxError: with the line and column of the offending input.
        CurveNotReducedError: if the declared factors do not form a reduced curve.
    """
    reader = _SpecReader(name)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        if not content.strip():
            continue
        reader.last_line = lineno
        if ":" not in content:
            raise SpecSyntaxError("expected 'key: value'", lineno)
        key, value = content.split(":", 1)
        key = key.strip()
        if key not in KEYS:
            raise SpecSyntaxError(f"unknown key {key!r}", lineno, raw.index(key) + 1 if key else 1)
        reader.feed(key, value, lineno, len(content) - len(value) + 1)
    return reader.finish()


def load_spec(path: Path) -> ParsedSpec:
    path = Path(path)
    return parse_curve_spec(read_text(path), name=path.stem)
