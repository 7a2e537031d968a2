"""Exact symplectic Chern-number obstructions to compatible Einstein and Kähler metrics."""

__version__ = "0.1.0"
