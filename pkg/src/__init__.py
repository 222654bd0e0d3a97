"""curve-h1: algebraic de Rham H¹ of affine plane curves, with a truncated-degree oracle."""

__version__ = "0.1.0"
