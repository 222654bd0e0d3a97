"""Topological side: projective closure, genus, Euler characteristic and Betti numbers."""
