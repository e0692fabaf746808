"""
Unit tests for element orders, q-minimality and q-goodness.
"""

import pytest

from src.classification.models import OrdersRow
from src.classification.orders import (
    element_orders,
    is_q_good,
    is_q_minimal,
    orders_table,
    orders_table_upto,
)
from src.config.reference_data import REFERENCE_ORDERS_TABLE
from src.utils.errors import GroupError


class TestElementOrders:
    """Test suite for the set of realized orders."""

    def test_psl2_7(self):
        assert element_orders(7) == {2, 3, 4, 7}

    def test_psl2_8(self):
        assert element_orders(8) == {2, 3, 7, 9}

    def test_rejects_non_prime_power(self):
        with pytest.raises(ValueError):
            element_orders(10)


class TestPredicates:
    """Test suite for is_q_minimal and is_q_good."""

    def test_unipotent_order(self):
        assert is_q_minimal(7, 7)
        assert not is_q_minimal(9, 3)
        assert not is_q_minimal(8, 2)

    def test_semisimple_orders(self):
        # 5 divides 3^2 + 1 but neither 3 - 1 nor 3 + 1
        assert is_q_minimal(9, 5)
        # 3 has order 2 modulo 8
        assert is_q_minimal(9, 4)
        # 2 already occurs in PSL2(3)
        assert not is_q_minimal(9, 2)

    def test_missing_order(self):
        with pytest.raises(GroupError):
            is_q_minimal(7, 5)

    @pytest.mark.parametrize("q, n, expected", [
        (7, 2, True),
        (7, 3, True),
        (7, 4, False),
        (17, 4, True),
        (17, 8, False),
        (9, 5, True),
        (11, 6, False),
    ])
    def test_q_good(self, q, n, expected):
        assert is_q_good(q, n) is expected


class TestOrdersTable:
    """Test suite for the orders table against the reference rows."""

    @pytest.mark.parametrize("q", sorted(REFERENCE_ORDERS_TABLE))
    def test_reference_rows(self, q):
        expected = REFERENCE_ORDERS_TABLE[q]
        row = orders_table(q)
        assert row.unipotent_order == expected["unipotent"]
        assert row.minimal_good == expected["good"]
        assert row.minimal_not_good == expected["not_good"]

    def test_upto_skips_non_prime_powers(self):
        rows = orders_table_upto(10)
        assert [row.q for row in rows] == [2, 3, 4, 5, 7, 8, 9]

    def test_row_validation(self):
        with pytest.raises(ValueError):
            OrdersRow(q=7, unipotent_order=7, minimal_good=[2], minimal_not_good=[2])

    def test_row_serializes(self):
        assert orders_table(9).model_dump() == {
            "q": 9,
            "unipotent_order": 3,
            "minimal_good": [5],
            "minimal_not_good": [4],
        }
