"""
Unit tests for the trace and element counting formulas.
"""

import pytest
from sympy import factorint

from src.classification.counts import (
    element_counts,
    element_counts_from_classes,
    trace_counts,
    trace_counts_formula,
)
from src.config.reference_data import VERIFICATION_CONFIG

PRIME_POWERS = [
    q for q in range(2, VERIFICATION_CONFIG["trace_counts"]["q_max"] + 1) if len(factorint(q)) == 1
]


class TestTraceCounts:
    """Test suite for counting traces by type."""

    def test_psl2_7(self, g7):
        counts = trace_counts(g7)
        assert (counts.unipotent, counts.split, counts.nonsplit, counts.bad) == (2, 2, 3, 2)

    def test_even_q_has_no_bad_count(self, psl2):
        counts = trace_counts(psl2(8))
        assert (counts.unipotent, counts.split, counts.nonsplit, counts.bad) == (1, 3, 4, None)

    @pytest.mark.parametrize("q", PRIME_POWERS)
    def test_formula(self, psl2, q):
        assert trace_counts(psl2(q)) == trace_counts_formula(q)


class TestElementCounts:
    """Test suite for counting elements by type."""

    @pytest.mark.parametrize("q, expected", [
        (4, (15, 20, 24, None)),
        (5, (24, 15, 20, 15)),
        (7, (48, 56, 63, 42)),
    ])
    def test_closed_forms(self, psl2, q, expected):
        counts = element_counts(psl2(q))
        assert (counts.unipotent, counts.split_ss, counts.nonsplit_ss, counts.non_q_good_ss) == expected

    @pytest.mark.parametrize("q", [
        q for q in PRIME_POWERS if q <= VERIFICATION_CONFIG["element_counts"]["q_max"]
    ])
    def test_class_aggregation(self, psl2, q):
        g = psl2(q)
        assert element_counts_from_classes(g) == element_counts(g)

    @pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9, 11, 13, 16])
    def test_counts_cover_the_group(self, psl2, q):
        g = psl2(q)
        counts = element_counts(g)
        assert 1 + counts.unipotent + counts.split_ss + counts.nonsplit_ss == g.group_order
