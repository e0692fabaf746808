"""
Finite fields F_q and their quadratic extensions.
"""

from .finite_field import FieldCtx, FiniteField, field_for_order, make_field, prime_power
from .polynomials import format_poly, is_irreducible, smallest_monic_irreducible
from .quadratic import QuadraticExtension, quad_ext

__all__ = [
    'FieldCtx',
    'FiniteField',
    'QuadraticExtension',
    'field_for_order',
    'format_poly',
    'is_irreducible',
    'make_field',
    'prime_power',
    'quad_ext',
    'smallest_monic_irreducible',
]
