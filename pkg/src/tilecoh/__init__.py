"""Exact-arithmetic analysis of cubical substitution tilings."""

__version__ = "0.1.0"
