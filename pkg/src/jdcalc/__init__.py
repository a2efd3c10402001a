"""Exact calculus of trivalent diagrams, weight systems and their characters."""

__version__ = "1.0.0"
