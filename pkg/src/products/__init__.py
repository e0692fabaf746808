"""
Class products, subgroup classification and generation certificates.
"""

from .generation import (
    factorization_absence_reason,
    generating_pair_in_class,
    generating_triple_in_class,
    pair_absence_reason,
    product_of_conjugate_generators,
    triple_absence_reason,
    validate_certificate,
)
from .macbeath import is_singular, iter_trace_triples, realize_trace_triple
from .models import GenCertificate, SetDescr, SubgroupKind, SubgroupTag
from .squares import (
    class_square_closed,
    expand_set_descr,
    total_size,
    unipotent_product_trace,
    unipotent_witness_products,
)
from .subgroups import share_fixed_point, subgroup_kind

__all__ = [
    'GenCertificate',
    'SetDescr',
    'SubgroupKind',
    'SubgroupTag',
    'class_square_closed',
    'expand_set_descr',
    'factorization_absence_reason',
    'generating_pair_in_class',
    'generating_triple_in_class',
    'is_singular',
    'iter_trace_triples',
    'pair_absence_reason',
    'product_of_conjugate_generators',
    'realize_trace_triple',
    'share_fixed_point',
    'subgroup_kind',
    'total_size',
    'triple_absence_reason',
    'unipotent_product_trace',
    'unipotent_witness_products',
    'validate_certificate',
]
