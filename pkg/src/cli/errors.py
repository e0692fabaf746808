"""
Command-Line Error Responses

Maps toolkit exceptions to exit codes and a standardized error body written
to standard error.

Design Considerations:
- Input problems exit 2, construction defects exit 3
- The body has the same shape for every error, with the valid selectors
  listed when a class selector fails
- No timestamps, so error output is reproducible
"""

import json
import logging
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, ValidationError

from src.utils.errors import ConstructionDefect, PSL2Error

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_DEFECT = 3


class ErrorResponse(BaseModel):
    """Standardized error body for command failures."""
    status: str = Field(
        default="error",
        description="Error status indicator"
    )
    message: str = Field(
        ...,
        description="Human-readable error message"
    )
    error_code: str = Field(
        ...,
        description="Machine-readable error code"
    )
    details: Optional[Dict[str, Any]] = Field(
        default=None,
        description="Additional error details"
    )


class ValidationErrorItem(BaseModel):
    """One failed settings field."""
    loc: List[str] = Field(..., description="Error location (field path)")
    msg: str = Field(..., description="Error message")
    type: str = Field(..., description="Error type")


def error_response(exc: Exception) -> ErrorResponse:
    """Build the error body for an exception raised while running a command."""
    if isinstance(exc, PSL2Error):
        return ErrorResponse(
            message=exc.message,
            error_code=exc.error_code,
            details=exc.details or None,
        )
    if isinstance(exc, ValidationError):
        items = [
            ValidationErrorItem(loc=[str(part) for part in err["loc"]], msg=err["msg"], type=err["type"])
            for err in exc.errors()
        ]
        return ErrorResponse(
            message="invalid configuration",
            error_code="INVALID_SETTINGS",
            details={"validation_errors": [item.model_dump() for item in items]},
        )
    return ErrorResponse(message=str(exc), error_code="INTERNAL_ERROR")


def exit_code_for(exc: Exception) -> int:
    if isinstance(exc, ConstructionDefect):
        return EXIT_DEFECT
    if isinstance(exc, (PSL2Error, ValidationError, ValueError)):
        return EXIT_INPUT
    return EXIT_DEFECT


def render_error(response: ErrorResponse, as_json: bool) -> str:
    """JSON body for --format json, one readable line otherwise."""
    if as_json:
        return json.dumps(response.model_dump(mode="json", exclude_none=True), sort_keys=True) + "\n"
    text = f"error [{response.error_code}]: {response.message}"
    valid = (response.details or {}).get("valid_selectors")
    if valid:
        text += "\nvalid selectors: " + ", ".join(valid)
    return text + "\n"
