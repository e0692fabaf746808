"""
Unit tests for per-q verification reports.
"""

from unittest.mock import patch

import pytest

from src.config.reference_data import VERIFICATION_CONFIG
from src.oracle.verification import EPSILON_WHEN_3_MOD_4, verify_all
from src.products.models import SetDescr
from src.utils.errors import ConstructionDefect


class TestVerifyAll:
    """Test suite for verify_all."""

    @pytest.mark.parametrize("q", [4, 5, 7, 8, 9])
    def test_small_groups_match(self, q):
        report = verify_all(q, seed=1)
        assert report.all_match, report.mismatches
        assert report.table1_match is True
        assert report.counts.match
        assert all(check.match for check in report.class_squares)
        assert all(check.match for check in report.generation)
        assert report.conjugacy.classes_match

    def test_epsilon_convention(self):
        assert verify_all(7).epsilon_observed == EPSILON_WHEN_3_MOD_4
        report = verify_all(5)
        assert report.epsilon.observed_total == 45
        assert report.epsilon_observed == EPSILON_WHEN_3_MOD_4

    def test_even_q_nonsplit_totals(self):
        report = verify_all(4)
        assert report.epsilon is None
        assert report.nonsplit_square_total_match is True

    def test_square_totals(self):
        totals = {t.class_label: t.expected for t in verify_all(4).square_totals}
        assert totals == {"unip": 60, "tr:1": 60, "tr:2": 45, "tr:3": 45}
        report = verify_all(7)
        totals = {t.class_label: t.expected for t in report.square_totals}
        assert totals == {"tr:0": 120, "tr:1": 168, "tr:3": 168}
        assert all(t.match for t in report.square_totals)

    def test_factorization_columns(self):
        """Both factorization modes are reported with their exhaustive results."""
        checks = {c.class_label: c for c in verify_all(7).generation}
        unipotent = checks["unip:sq"]
        assert unipotent.unipotent_factorization_expected is True
        assert unipotent.unipotent_factorization_found is True
        assert unipotent.unipotent_factorization_brute is True
        order_four = checks["tr:3"]
        assert order_four.unipotent_factorization_brute is False
        assert order_four.unipotent_factorization_reason
        involution = checks["tr:0"]
        assert (involution.factorization_expected, involution.factorization_brute) == (True, True)

        checks = {c.class_label: c for c in verify_all(5).generation}
        assert checks["tr:0"].factorization_brute is False
        assert checks["tr:0"].factorization_reason

    def test_construction_defect_is_recorded(self):
        """A failing construction becomes a mismatch and the report is still produced."""
        defect = ConstructionDefect("search failed")
        with patch("src.oracle.verification.generating_pair_in_class", side_effect=defect):
            report = verify_all(7)
        defects = [m for m in report.mismatches if m.check == "generation_defect"]
        assert not report.all_match
        assert {m.class_label for m in defects} == {c.class_label for c in report.generation}
        assert all(m.detail == "pair: search failed" for m in defects)
        assert len(report.generation) == 5

    def test_tiny_q_skips_class_products(self):
        report = verify_all(3)
        assert report.class_squares == []
        assert report.generation == []
        assert report.epsilon is None
        assert report.all_match

    def test_report_header(self):
        report = verify_all(9, seed=2)
        assert (report.p, report.e, report.defining_poly) == (3, 2, [1, 0, 1])
        assert report.seed == 2
        assert report.group_order == 360
        assert report.class_count == 7

    def test_deterministic(self):
        assert verify_all(7, seed=5).model_dump_json() == verify_all(7, seed=5).model_dump_json()

    def test_records_mismatches(self):
        """A wrong closed form is reported with the class it concerns."""
        with patch("src.oracle.verification.class_square_closed", return_value=SetDescr.WHOLE_GROUP):
            report = verify_all(7)
        assert not report.all_match
        labels = {m.class_label for m in report.mismatches if m.check == "class_square"}
        assert {"unip:sq", "unip:nonsq", "tr:0"} <= labels
        assert all(m.witness for m in report.mismatches if m.check == "class_square")

    def test_rejects_non_prime_power(self):
        with pytest.raises(ValueError):
            verify_all(12)

    @pytest.mark.slow
    @pytest.mark.parametrize("q", VERIFICATION_CONFIG["class_squares"]["q_values"])
    def test_acceptance_set(self, q):
        report = verify_all(q, seed=1)
        assert report.all_match, report.mismatches
