"""Exact kernel and law-checking suites for regular multiplier Hopf algebras
and their Yetter-Drinfel'd module categories."""

__version__ = "0.1.0"
