"""
Trace sets, order predicates and counting formulas.
"""

from .counts import element_counts, element_counts_from_classes, trace_counts, trace_counts_formula
from .models import ElementCounts, OrdersRow, StructuralType, TraceCounts, TraceKind, TraceQuality
from .orders import element_orders, is_q_good, is_q_minimal, orders_table, orders_table_upto
from .traces import trace_kind, trace_set

__all__ = [
    'ElementCounts',
    'OrdersRow',
    'StructuralType',
    'TraceCounts',
    'TraceKind',
    'TraceQuality',
    'element_counts',
    'element_counts_from_classes',
    'element_orders',
    'is_q_good',
    'is_q_minimal',
    'orders_table',
    'orders_table_upto',
    'trace_counts',
    'trace_counts_formula',
    'trace_kind',
    'trace_set',
]
