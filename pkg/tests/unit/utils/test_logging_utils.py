"""
Unit tests for encoding-safe logging and the error hierarchy.
"""

import io
import logging

import pytest

from src.utils.errors import (
    BudgetExceededError,
    ConstructionDefect,
    FieldError,
    GroupError,
    PSL2Error,
    SelectorError,
)
from src.utils.logging_utils import SafeFormatter, configure_safe_logging


class TestSafeFormatter:
    """Test suite for symbol substitution in log output."""

    def _record(self, message: str) -> logging.LogRecord:
        return logging.LogRecord("psl2", logging.INFO, __file__, 1, message, None, None)

    def test_ascii_substitution_when_forced(self, monkeypatch):
        """FORCE_ASCII_LOGGING replaces mathematical symbols."""
        monkeypatch.setenv("FORCE_ASCII_LOGGING", "1")
        formatter = SafeFormatter("%(message)s")

        assert formatter.format(self._record("Unipotent witness in tr:1²: [1, 2, 3, 4] • [0, 1, 6, 3]")) == (
            "Unipotent witness in tr:1^2: [1, 2, 3, 4] * [0, 1, 6, 3]"
        )

    def test_symbols_kept_on_utf8_stream(self, monkeypatch):
        """UTF-8 streams receive the symbols unchanged."""
        monkeypatch.delenv("FORCE_ASCII_LOGGING", raising=False)
        stream = io.TextIOWrapper(io.BytesIO(), encoding="utf-8")
        formatter = SafeFormatter("%(message)s", stream=stream)
        formatter.is_windows = False
        formatter.limited_encoding = formatter._has_limited_encoding(stream)

        assert formatter.format(self._record("tr:1² • unip:sq")) == "tr:1² • unip:sq"

    def test_limited_encoding_detected(self, monkeypatch):
        """Non-UTF streams fall back to ASCII."""
        monkeypatch.delenv("FORCE_ASCII_LOGGING", raising=False)
        stream = io.TextIOWrapper(io.BytesIO(), encoding="latin-1")
        formatter = SafeFormatter("%(message)s", stream=stream)

        assert formatter.limited_encoding is True


class TestConfigureSafeLogging:
    """Test suite for root logger configuration."""

    def test_single_handler_on_stream(self, restore_root_logging):
        """Configuration installs exactly one handler on the given stream."""
        stream = io.StringIO()
        root = configure_safe_logging("INFO", stream=stream)
        logging.getLogger("psl2.test").info("enumerated")
        assert len(root.handlers) == 1
        assert "enumerated" in stream.getvalue()
        assert root.level == logging.INFO


class TestErrors:
    """Test suite for the exception hierarchy."""

    def test_error_codes(self):
        """Each error type carries its machine-readable code."""
        assert FieldError("x").error_code == "FIELD_ERROR"
        assert GroupError("x").error_code == "GROUP_ERROR"
        assert BudgetExceededError("x").error_code == "BUDGET_EXCEEDED"
        assert ConstructionDefect("x").error_code == "CONSTRUCTION_DEFECT"

    def test_value_errors(self):
        """Input errors are also ValueErrors; defects are RuntimeErrors."""
        assert issubclass(FieldError, ValueError)
        assert issubclass(GroupError, ValueError)
        assert issubclass(ConstructionDefect, RuntimeError)
        assert issubclass(BudgetExceededError, PSL2Error)

    def test_selector_error_lists_valid_selectors(self):
        """SelectorError keeps the selectors in its details."""
        exc = SelectorError("bad selector", ["id", "unip"])

        assert exc.valid_selectors == ["id", "unip"]
        assert exc.details == {"valid_selectors": ["id", "unip"]}

    def test_details_default_to_empty(self):
        with pytest.raises(PSL2Error) as excinfo:
            raise GroupError("boom")
        assert excinfo.value.details == {}
        assert excinfo.value.message == "boom"
