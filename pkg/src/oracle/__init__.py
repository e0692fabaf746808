"""
Brute-force oracle: group enumeration, exhaustive checks and verification reports.
"""

from .enumeration import (
    GroupTable,
    class_square_brute,
    closure,
    conjugacy_classes_brute,
    element_counts_brute,
    enumerate_group,
    factorization_brute,
    generating_pair_brute,
    generating_triple_brute,
    trace_sets_brute,
    unipotent_orbits_brute,
)
from .models import VerifyReport
from .verification import verify_all

__all__ = [
    'GroupTable',
    'VerifyReport',
    'class_square_brute',
    'closure',
    'conjugacy_classes_brute',
    'element_counts_brute',
    'enumerate_group',
    'factorization_brute',
    'generating_pair_brute',
    'generating_triple_brute',
    'trace_sets_brute',
    'unipotent_orbits_brute',
    'verify_all',
]
