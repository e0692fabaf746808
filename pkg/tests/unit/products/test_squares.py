"""
Unit tests for closed-form class squares.
"""

import pytest

from src.config.reference_data import VERIFICATION_CONFIG
from src.groups.models import ClassId, ElementKind
from src.oracle.enumeration import class_square_brute
from src.products.models import SetDescr
from src.products.squares import (
    class_square_closed,
    expand_set_descr,
    require_closed_form_range,
    total_size,
    unipotent_product_trace,
    unipotent_witness_products,
)
from src.utils.errors import GroupError


def _by_label(ctx, label):
    return next(cid for cid, _ in ctx.all_class_ids() if cid.label == label)


class TestClosedForms:
    """Test suite for the symbolic class squares."""

    @pytest.mark.parametrize("q, label, expected", [
        (7, "unip:sq", SetDescr.UNIPOTENTS_PLUS_GOOD_SS),
        (7, "tr:0", SetDescr.ALL_MINUS_UNIPOTENTS),
        (7, "tr:1", SetDescr.WHOLE_GROUP),
        (7, "tr:3", SetDescr.WHOLE_GROUP),
        (5, "unip:nonsq", SetDescr.UNIPOTENTS_PLUS_GOOD_SS_PLUS_IDENTITY),
        (5, "tr:0", SetDescr.WHOLE_GROUP),
        (8, "unip", SetDescr.WHOLE_GROUP),
        (4, "tr:1", SetDescr.WHOLE_GROUP),
        (4, "tr:2", SetDescr.ALL_MINUS_UNIPOTENTS),
    ])
    def test_closed_form(self, psl2, q, label, expected):
        g = psl2(q)
        assert class_square_closed(g, _by_label(g, label)) == expected

    def test_unipotent_square_q7(self, g7):
        ids = expand_set_descr(g7, class_square_closed(g7, _by_label(g7, "unip:sq")))
        assert sorted(cid.label for cid in ids) == ["tr:0", "tr:1", "unip:nonsq", "unip:sq"]
        assert total_size(g7, ids) == 125

    def test_unipotent_square_q5(self, g5):
        ids = expand_set_descr(g5, class_square_closed(g5, _by_label(g5, "unip:sq")))
        assert sorted(cid.label for cid in ids) == ["id", "tr:1", "unip:nonsq", "unip:sq"]
        assert total_size(g5, ids) == 45

    def test_whole_group_total(self, g7):
        assert total_size(g7, expand_set_descr(g7, SetDescr.WHOLE_GROUP)) == 168

    def test_closed_form_range(self, psl2, g7):
        with pytest.raises(GroupError):
            require_closed_form_range(g7, ClassId(ElementKind.IDENTITY))
        g3 = psl2(3)
        with pytest.raises(GroupError):
            require_closed_form_range(g3, _by_label(g3, "unip:sq"))


class TestProductConstructions:
    """Test suite for the explicit product constructions."""

    @pytest.mark.parametrize("entries", [(1, 0, 3, 1), (2, 3, 1, 2), (0, 6, 1, 0), (1, 1, 0, 1)])
    def test_unipotent_product_trace(self, g7, entries):
        m = g7.matrix(*entries)
        f = g7.field
        assert unipotent_product_trace(g7, m) == f.sub(2, f.mul(m.c, m.c))

    def test_involutions_miss_unipotents_when_q_is_3_mod_4(self, g7):
        assert unipotent_witness_products(g7, _by_label(g7, "tr:0")) is None

    @pytest.mark.parametrize("q, label", [(7, "tr:1"), (7, "tr:3"), (5, "tr:0"), (8, "tr:3")])
    def test_unipotent_witness(self, psl2, q, label):
        g = psl2(q)
        cid = _by_label(g, label)
        x, y = unipotent_witness_products(g, cid)
        assert g.class_id(x) == cid
        assert g.class_id(y) == cid
        assert g.class_id(g.mul(x, y)).is_unipotent

    def test_nonsplit_classes_miss_unipotents_for_even_q(self, psl2):
        g = psl2(8)
        assert _by_label(g, "tr:1").kind == ElementKind.NONSPLIT
        assert unipotent_witness_products(g, _by_label(g, "tr:1")) is None

    def test_witness_needs_semisimple_class(self, g7):
        with pytest.raises(GroupError):
            unipotent_witness_products(g7, _by_label(g7, "unip:sq"))


class TestAgainstEnumeration:
    """Test suite comparing the closed forms with enumerated products."""

    @pytest.mark.parametrize("q", [4, 5, 7, 8, 9])
    def test_small_groups(self, group_table, q):
        table = group_table(q)
        g = table.ctx
        for cid, _ in g.all_class_ids():
            if cid.is_identity:
                continue
            assert class_square_brute(table, cid) == expand_set_descr(g, class_square_closed(g, cid))

    @pytest.mark.slow
    @pytest.mark.parametrize("q", VERIFICATION_CONFIG["class_squares"]["q_values"])
    def test_acceptance_set(self, group_table, q):
        table = group_table(q)
        g = table.ctx
        for cid, _ in g.all_class_ids():
            if cid.is_identity:
                continue
            assert class_square_brute(table, cid) == expand_set_descr(g, class_square_closed(g, cid))
