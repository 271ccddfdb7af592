"""Costas structures over finite abelian groups and finite fields.

Construction, verification, enumeration and counting for: classical Costas
sequences, circular Costas maps between abelian groups, multidimensional
exponential-map constructions, product difference sets, and Costas
permutation polynomials.
"""

from .gf import FiniteField, FieldElement, make_field, field_of_order

__all__ = [
    "FiniteField",
    "FieldElement",
    "make_field",
    "field_of_order",
]

__version__ = "0.1.0"
