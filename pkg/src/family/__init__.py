"""Fibers of a map to the line: generic h¹, special fibers and semicontinuity."""

from .scan import SpecialValues, family_scan, fiber_h1, generic_h1, special_values, tame_check
from .section6 import section6_family, section6_fiber
from .spec import FamilyReport, FamilySpec, FiberRecord, SemicontinuityVerdict, TameCheck

__all__ = [
    "FamilyReport",
    "FamilySpec",
    "FiberRecord",
    "SemicontinuityVerdict",
    "SpecialValues",
    "TameCheck",
    "family_scan",
    "fiber_h1",
    "generic_h1",
    "section6_family",
    "section6_fiber",
    "special_values",
    "tame_check",
]
