"""
Exception hierarchy shared by every package in the toolkit.
"""

from typing import Any, Dict, List, Optional


class PSL2Error(Exception):
    """Base class for all toolkit errors."""
    error_code = "PSL2_ERROR"

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}


class FieldError(PSL2Error, ValueError):
    """Invalid field parameters or elements that do not belong to a field."""
    error_code = "FIELD_ERROR"


class GroupError(PSL2Error, ValueError):
    """Invalid matrices, class labels or group-level preconditions."""
    error_code = "GROUP_ERROR"


class BudgetExceededError(PSL2Error):
    """An enumeration or closure would exceed the configured budget."""
    error_code = "BUDGET_EXCEEDED"


class ConstructionDefect(PSL2Error, RuntimeError):
    """A construction that must succeed did not; always a bug, never an answer."""
    error_code = "CONSTRUCTION_DEFECT"


class SelectorError(PSL2Error, ValueError):
    """A class selector did not resolve to exactly one class."""
    error_code = "INVALID_SELECTOR"

    def __init__(self, message: str, valid_selectors: List[str]):
        super().__init__(message, {"valid_selectors": valid_selectors})
        self.valid_selectors = valid_selectors
