"""Dissipative belief dynamics on Fisher–Rao geometry: geometry, dynamics, regularizers, networks."""

__version__ = "0.1.0"
