"""
Encoding-Safe Logging Utility

Provides logging configuration with Unicode handling for the notation used
in class-square diagnostics, falling back to ASCII spellings on terminals
with limited encoding support.
"""

import logging
import os
import platform
import sys
from typing import Optional, TextIO


class SafeFormatter(logging.Formatter):
    """
    Log formatter with encoding-safe symbol substitution.

    Replaces mathematical Unicode symbols with ASCII spellings when the
    environment cannot be trusted to render them.
    """

    SYMBOL_MAP = {
        "²": "^2",
        "•": "*",
    }

    def __init__(self, fmt: Optional[str] = None, datefmt: Optional[str] = None,
                 style: str = '%', validate: bool = True,
                 stream: Optional[TextIO] = None):
        """
        Initialize formatter with format string and symbol replacement.

        Args:
            fmt: Format string for log messages
            datefmt: Date format string
            style: Style of format string (%, {, or $)
            validate: Whether to validate the format string
            stream: Stream whose encoding decides whether substitution is needed
        """
        super().__init__(fmt, datefmt, style, validate)
        self.is_windows = platform.system() == "Windows"
        self.force_ascii = os.environ.get("FORCE_ASCII_LOGGING", "0").lower() in ("1", "true", "yes")
        self.limited_encoding = self._has_limited_encoding(stream)

    def _has_limited_encoding(self, stream: Optional[TextIO]) -> bool:
        """
        Detect whether the target stream can render the symbol set.

        Returns:
            bool: True if symbols should be replaced with ASCII
        """
        if self.force_ascii:
            return True

        encoding = getattr(stream or sys.stderr, "encoding", None) or ""
        if "utf" not in encoding.lower():
            return True

        if self.is_windows and "WT_SESSION" not in os.environ:
            return os.environ.get("PYTHONIOENCODING", "").lower() != "utf-8"

        return False

    def format(self, record: logging.LogRecord) -> str:
        """Format the record, substituting symbols when required."""
        formatted_message = super().format(record)

        if self.limited_encoding:
            for unicode_char, ascii_char in self.SYMBOL_MAP.items():
                formatted_message = formatted_message.replace(unicode_char, ascii_char)

        return formatted_message


def configure_safe_logging(
    level: str = "WARNING",
    stream: Optional[TextIO] = None,
    format_str: Optional[str] = None
) -> logging.Logger:
    """
    Configure the root logger with encoding-safe formatting.

    All diagnostics go to one stream (standard error by default) so that
    standard output carries results only.

    Args:
        level: Logging level name
        stream: Target stream, defaults to sys.stderr
        format_str: Custom format string for log messages

    Returns:
        logging.Logger: The configured root logger
    """
    root = logging.getLogger()
    root.setLevel(level)

    if root.hasHandlers():
        root.handlers.clear()

    if format_str is None:
        format_str = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

    target = stream or sys.stderr
    handler = logging.StreamHandler(target)
    handler.setFormatter(SafeFormatter(format_str, stream=target))
    root.addHandler(handler)

    return root
