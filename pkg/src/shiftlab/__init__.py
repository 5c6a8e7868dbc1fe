"""Algebraic shifting of simplicial complexes and companion invariants."""

__version__ = "0.1.0"
