"""Commutants of Cartan subalgebras in S(sl(n)) and their polynomial algebras."""

from .exact_poly import Monomial, Polynomial, Scalar, VariableRegistry

__all__ = ["Monomial", "Polynomial", "Scalar", "VariableRegistry"]
__version__ = "0.1.0"
