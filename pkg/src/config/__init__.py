"""
Configuration package initialization.
"""

from .settings import PSL2Settings, get_settings
from .reference_data import REFERENCE_ORDERS_TABLE, VERIFICATION_CONFIG

__all__ = [
    'PSL2Settings',
    'get_settings',
    'REFERENCE_ORDERS_TABLE',
    'VERIFICATION_CONFIG',
]
