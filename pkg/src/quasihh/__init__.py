"""Hochschild (co)homology for quasi-associative graded algebras, the unified
arc algebras, and unified/odd/even Khovanov homology of links."""

__version__ = "0.1.0"
