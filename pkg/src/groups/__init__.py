"""
The groups PSL2(q): elements, orders and conjugacy classes.
"""

from .models import ClassId, ElementKind, Mat2, PElem
from .psl2 import GroupCtx, group_ctx, group_for_order

__all__ = [
    'ClassId',
    'ElementKind',
    'GroupCtx',
    'Mat2',
    'PElem',
    'group_ctx',
    'group_for_order',
]
