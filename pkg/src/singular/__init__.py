"""Singularity census of reduced plane curves: points, Milnor numbers, branches and delta."""
