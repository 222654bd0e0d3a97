"""Exception hierarchy shared by every subpackage.

Each error carries a stable ``kind`` string.  The command-line front end maps
these to exit codes and structured JSON error objects; library code only raises.
"""

from __future__ import annotations


class CurveH1Error(Exception):
    """Base class for all computation errors."""

    kind = "computation error"

    def __init__(self, message: str | None = None) -> None:
        super().__init__(message or self.kind)
        self.message = message or self.kind


class DomainError(CurveH1Error, ValueError):
    kind = "domain error"


class BudgetExceededError(CurveH1Error):
    kind = "budget exceeded"


class CurveNotReducedError(CurveH1Error):
    kind = "curve not reduced"


class UnsupportedFieldError(CurveH1Error):
    """Raised when a computation would need a tower of number fields."""

    kind = "unsupported point field"

    def __init__(self, message: str | None = None, kind: str | None = None) -> None:
        if kind is not None:
            self.kind = kind
        super().__init__(message)


class NonIsolatedSingularityError(CurveH1Error):
    kind = "non-isolated singularity"


class CriticalLocusNotFiniteError(CurveH1Error):
    kind = "critical locus not finite"


class InconsistentSingularityDataError(CurveH1Error):
    kind = "inconsistent singularity data"


class NotAbsolutelyIrreducibleError(CurveH1Error):
    kind = "component not absolutely irreducible"


class NotACurvePresentationError(CurveH1Error):
    kind = "not a curve presentation"


class NotANumericalSemigroupError(CurveH1Error):
    kind = "not a numerical semigroup of a branch"


class DegenerateFamilyError(CurveH1Error):
    kind = "degenerate family"


class GenericSamplingError(CurveH1Error):
    kind = "generic sampling inconsistent"


class OracleError(CurveH1Error):
    kind = "oracle assertion failed"


class SpecSyntaxError(CurveH1Error):
    """Syntax or semantic error in a curve-spec file, with its location."""

    kind = "syntax error"

    def __init__(self, message: str, line: int, column: int = 1, kind: str | None = None) -> None:
        if kind is not None:
            self.kind = kind
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
        self.detail = message
