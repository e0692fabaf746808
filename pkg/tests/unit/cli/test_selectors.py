"""
Unit tests for class selectors.
"""

import pytest

from src.cli.selectors import resolve_selector, valid_selectors
from src.groups.models import ElementKind
from src.utils.errors import SelectorError


class TestValidSelectors:
    """Test suite for the listing of selectors."""

    def test_psl2_7(self, g7):
        assert valid_selectors(g7) == [
            "id", "unip:sq", "unip:nonsq", "tr:0", "tr:1", "tr:3",
            "ord:2", "ord:3", "ord:4", "ord:7", "ord:7:1", "ord:7:2",
        ]

    def test_every_selector_resolves(self, psl2):
        for q in (4, 8, 9):
            g = psl2(q)
            for text in valid_selectors(g):
                resolve_selector(g, text)


class TestResolveSelector:
    """Test suite for resolving selectors to classes."""

    @pytest.mark.parametrize("text, label", [
        ("id", "id"),
        ("unip:sq", "unip:sq"),
        ("unip:nonsq", "unip:nonsq"),
        ("tr:6", "tr:1"),
        ("tr:4", "tr:3"),
        ("ord:4", "tr:3"),
        ("ord:7", "unip:sq"),
        ("ord:7:2", "unip:nonsq"),
        (" tr:0 ", "tr:0"),
    ])
    def test_psl2_7(self, g7, text, label):
        assert resolve_selector(g7, text).label == label

    def test_even_q(self, psl2):
        g = psl2(8)
        assert resolve_selector(g, "unip").label == "unip"
        assert resolve_selector(g, "ord:9").kind == ElementKind.NONSPLIT
        assert resolve_selector(g, "ord:9:3").kind == ElementKind.NONSPLIT

    @pytest.mark.parametrize("text", [
        "unip", "unip:maybe", "tr:2", "tr:5", "tr:7", "tr:x", "ord:5", "ord:7:3", "ord:", "foo", "id:1", "",
    ])
    def test_rejects(self, g7, text):
        with pytest.raises(SelectorError) as excinfo:
            resolve_selector(g7, text)
        assert "tr:3" in excinfo.value.valid_selectors

    def test_odd_labels_on_even_q(self, psl2):
        with pytest.raises(SelectorError):
            resolve_selector(psl2(4), "unip:sq")
