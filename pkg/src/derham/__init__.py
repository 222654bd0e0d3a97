"""Both sides of the H¹ identity for plane curves."""

from .h1 import H1Report, MuPrime, h1_dimension, is_disjoint_lines, local_mu_prime

__all__ = ["H1Report", "MuPrime", "h1_dimension", "is_disjoint_lines", "local_mu_prime"]
