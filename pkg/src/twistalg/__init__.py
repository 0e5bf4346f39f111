"""Exact symbolic engine for theta-deformed quaternionic algebras."""

__version__ = "0.1.0"
