"""Exact computation of generalized Taft algebra actions on quantum generalized Weyl algebras."""

__version__ = "0.1.0"
