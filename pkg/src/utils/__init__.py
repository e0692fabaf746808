"""
Shared utilities: exception hierarchy and logging configuration.
"""

from .errors import (
    PSL2Error,
    FieldError,
    GroupError,
    BudgetExceededError,
    ConstructionDefect,
    SelectorError,
)
from .logging_utils import SafeFormatter, configure_safe_logging

__all__ = [
    'PSL2Error',
    'FieldError',
    'GroupError',
    'BudgetExceededError',
    'ConstructionDefect',
    'SelectorError',
    'SafeFormatter',
    'configure_safe_logging',
]
