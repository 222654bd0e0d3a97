"""Recursive-descent parser for polynomial expressions.

Grammar (whitespace insensitive)::

    expr  := ['+'|'-'] term (('+'|'-') term)*
    term  := coeff? factor ('*'? factor)*
    factor:= var ('^' nat)? | '(' expr ')' ('^' nat)?
    coeff := integer | integer '/' positive-integer

Juxtaposition multiplies, so ``(y-x)(y+x)`` and ``2xy`` are valid.  Variable
names are matched longest-first against the declared ring, so ``xy`` reads as
``x*y`` in the ring ``x, y``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..errors import SpecSyntaxError
from .polynomial import MultiPoly


class _ExpressionParser:
    def __init__(self, text: str, variables: Sequence[str], line: int, column_offset: int) -> None:
        self.text = text
        self.variables = tuple(variables)
        self.by_length = sorted(self.variables, key=len, reverse=True)
        self.pos = 0
        self.line = line
        self.column_offset = column_offset

    def error(self, message: str, kind: str | None = None) -> SpecSyntaxError:
        return SpecSyntaxError(message, self.line, self.column_offset + self.pos + 1, kind=kind)

    def peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> MultiPoly:
        if not self.peek():
            raise self.error("empty polynomial expression")
        p = self.expr()
        if self.peek():
            raise self.error(f"unexpected character {self.peek()!r}")
        return p

    def expr(self) -> MultiPoly:
        sign = 1
        if self.peek() and self.peek() in "+-":
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        result = self.term() * sign
        while self.peek() and self.peek() in "+-":
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
            result = result + self.term() * sign
        return result

    def integer(self) -> int:
        self.peek()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def term(self) -> MultiPoly:
        found = False
        result = MultiPoly.constant(self.variables, 1)
        if self.peek().isdigit():
            num = self.integer()
            den = 1
            if self.peek() == "/":
                self.pos += 1
                den = self.integer()
                if den == 0:
                    raise self.error("zero denominator")
            result = MultiPoly.constant(self.variables, Fraction(num, den))
            found = True
        while True:
            c = self.peek()
            if c == "*" and found:
                self.pos += 1
                c = self.peek()
                if not (c == "(" or c.isalpha() or c == "_"):
                    raise self.error("expected a factor after '*'")
            if c == "(" or c.isalpha() or c == "_":
                result = result * self.factor()
                found = True
            else:
                break
        if not found:
            raise self.error("expected a term")
        return result

    def exponent(self) -> int:
        if self.peek() == "^":
            self.pos += 1
            if not self.peek().isdigit():
                raise self.error("expected a natural-number exponent")
            return self.integer()
        return 1

    def factor(self) -> MultiPoly:
        if self.peek() == "(":
            self.pos += 1
            inner = self.expr()
            if self.peek() != ")":
                raise self.error("missing closing parenthesis")
            self.pos += 1
            return inner ** self.exponent()
        for name in self.by_length:
            if self.text.startswith(name, self.pos):
                self.pos += len(name)
                return MultiPoly.variable(self.variables, name) ** self.exponent()
        end = self.pos
        while end < len(self.text) and (self.text[end].isalnum() or self.text[end] == "_"):
            end += 1
        raise self.error(f"unknown variable {self.text[self.pos:end]!r}", kind="unknown variable")


def parse_polynomial(
    text: str, variables: Sequence[str], line: int = 1, column_offset: int = 0
) -> MultiPoly:
    """Parse ``text`` into a polynomial of the ring ``variables``.

    Raises:
        SpecSyntaxError: with the line and column of the offending character.
    """
    return _ExpressionParser(text, variables, line, column_offset).parse()
