"""Exact certification of non-unipotent Milnor cohomology vanishing for hyperplane arrangements."""

__version__ = "0.1.0"
