"""Buchberger engine: reduced Groebner bases, normal forms, staircases and elimination."""
