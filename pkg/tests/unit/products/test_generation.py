"""
Unit tests for generation certificates and their presence rules.
"""

import pytest

from src.config.reference_data import VERIFICATION_CONFIG
from src.groups.models import ClassId, ElementKind
from src.products.generation import (
    UNIPOTENT_FALLBACK_Q,
    factorization_absence_reason,
    generating_pair_in_class,
    generating_triple_in_class,
    pair_absence_reason,
    product_of_conjugate_generators,
    triple_absence_reason,
    validate_certificate,
)
from src.oracle.enumeration import factorization_brute
from src.products.models import GenCertificate
from src.utils.errors import ConstructionDefect, GroupError


def _by_label(ctx, label):
    return next(cid for cid, _ in ctx.all_class_ids() if cid.label == label)


def _assert_generates(ctx, cert):
    x, y = (ctx.elem(*entries) for entries in cert.elements[:2])
    assert len(ctx.generate([x, y])) == ctx.group_order
    assert cert.closure_order == ctx.group_order


class TestPresenceRules:
    """Test suite for the documented absence reasons."""

    def test_involutions_have_no_pair(self, g7):
        assert pair_absence_reason(g7, _by_label(g7, "tr:0")) is not None
        assert pair_absence_reason(g7, _by_label(g7, "tr:1")) is None

    def test_unipotent_pairs_in_psl2_9(self, psl2):
        g = psl2(9)
        assert pair_absence_reason(g, _by_label(g, "unip:sq")) is not None
        assert pair_absence_reason(g, _by_label(g, "unip:nonsq")) is not None

    def test_even_unipotents_are_involutions(self, psl2):
        g = psl2(8)
        assert pair_absence_reason(g, _by_label(g, "unip")) is not None

    @pytest.mark.parametrize("q, label, present", [
        (7, "unip:sq", True),
        (7, "tr:3", True),
        (7, "tr:1", False),
        (7, "tr:0", False),
        (8, "unip", False),
        (9, "unip:sq", False),
        (9, "tr:0", False),
    ])
    def test_triple_rules(self, psl2, q, label, present):
        g = psl2(q)
        assert (triple_absence_reason(g, _by_label(g, label)) is None) is present

    def test_factorization_rules(self, g7, psl2):
        assert factorization_absence_reason(g7, g7.elem(3, 6, 1, 0)) is None
        assert factorization_absence_reason(g7, g7.elem(3, 6, 1, 0), unipotent_factors=True) is not None
        assert factorization_absence_reason(g7, g7.elem(1, 6, 1, 0), unipotent_factors=True) is None
        assert factorization_absence_reason(g7, g7.elem(1, 1, 0, 1), unipotent_factors=True) is None
        g8 = psl2(8)
        assert factorization_absence_reason(g8, g8.elem(1, 1, 0, 1)) is not None
        assert factorization_absence_reason(g8, g8.elem(1, 1, 0, 1), unipotent_factors=True) is not None

    def test_excluded_inputs(self, g7, psl2):
        with pytest.raises(GroupError):
            pair_absence_reason(g7, ClassId(ElementKind.IDENTITY))
        with pytest.raises(GroupError):
            factorization_absence_reason(g7, g7.identity)
        g3 = psl2(3)
        with pytest.raises(GroupError):
            factorization_absence_reason(g3, g3.elem(1, 1, 0, 1))


class TestCertificates:
    """Test suite for constructed pairs, triples and factorizations."""

    @pytest.mark.parametrize("q", [4, 5, 7, 8, 11])
    def test_pairs(self, psl2, q):
        g = psl2(q)
        for cid, _ in g.all_class_ids():
            if cid.is_identity:
                continue
            cert = generating_pair_in_class(g, cid)
            if pair_absence_reason(g, cid) is not None:
                assert cert is None
                continue
            assert cert.relation == "pair"
            assert cert.class_label == cid.label
            assert all(g.class_id(g.elem(*e)) == cid for e in cert.elements)
            _assert_generates(g, cert)

    @pytest.mark.parametrize("q", [5, 7, 8, 11, 13])
    def test_triples(self, psl2, q):
        g = psl2(q)
        for cid, _ in g.all_class_ids():
            if cid.is_identity:
                continue
            cert = generating_triple_in_class(g, cid)
            if triple_absence_reason(g, cid) is not None:
                assert cert is None
                continue
            elements = [g.elem(*e) for e in cert.elements]
            assert len(elements) == 3
            assert g.product(elements) == g.identity
            assert all(g.class_id(x) == cid for x in elements)
            _assert_generates(g, cert)

    def test_unipotent_triple_for_prime_q(self, g7):
        for label in ("unip:sq", "unip:nonsq"):
            cert = generating_triple_in_class(g7, _by_label(g7, label))
            assert cert.class_label == label

    @pytest.mark.parametrize("q", [5, 7, 8, 9])
    def test_factorizations(self, psl2, q):
        g = psl2(q)
        for cid, _ in g.all_class_ids():
            if cid.is_identity:
                continue
            z = g.representative(cid)
            for unipotent_factors in (False, True):
                cert = product_of_conjugate_generators(g, z, unipotent_factors)
                if factorization_absence_reason(g, z, unipotent_factors) is not None:
                    assert cert is None
                    continue
                x, y = (g.elem(*e) for e in cert.elements)
                assert g.mul(x, y) == z
                assert cert.target == z.as_list()
                if unipotent_factors or q not in UNIPOTENT_FALLBACK_Q:
                    assert g.class_id(x).is_unipotent is unipotent_factors
                _assert_generates(g, cert)

    def test_seed_is_reproducible(self, g7):
        cid = _by_label(g7, "tr:3")
        assert generating_pair_in_class(g7, cid, seed=3) == generating_pair_in_class(g7, cid, seed=3)

    @pytest.mark.slow
    @pytest.mark.parametrize("q", VERIFICATION_CONFIG["generation"]["q_values"])
    def test_acceptance_set(self, psl2, q):
        g = psl2(q)
        for cid, _ in g.all_class_ids():
            if cid.is_identity:
                continue
            pair = generating_pair_in_class(g, cid)
            triple = generating_triple_in_class(g, cid)
            assert (pair is not None) is (pair_absence_reason(g, cid) is None)
            assert (triple is not None) is (triple_absence_reason(g, cid) is None)


class TestFactorizationRules:
    """Test suite for factorization presence against exhaustive search."""

    @pytest.mark.parametrize("unipotent_factors", [False, True])
    @pytest.mark.parametrize("q", [5, 7, 9, 11])
    def test_rules_match_exhaustive_search(self, psl2, group_table, q, unipotent_factors):
        g, table = psl2(q), group_table(q)
        for cid, _ in g.all_class_ids():
            if cid.is_identity:
                continue
            z = g.representative(cid)
            expected = factorization_absence_reason(g, z, unipotent_factors) is None
            assert (factorization_brute(table, z, unipotent_factors) is not None) is expected, cid.label
            assert (product_of_conjugate_generators(g, z, unipotent_factors) is not None) is expected, cid.label

    @pytest.mark.parametrize("q, label", [(5, "tr:1"), (7, "tr:0")])
    def test_unipotent_fallback(self, psl2, q, label):
        """Targets without semisimple factorizations fall back to unipotent factors."""
        g = psl2(q)
        z = g.representative(_by_label(g, label))
        cert = product_of_conjugate_generators(g, z)
        x, y = (g.elem(*e) for e in cert.elements)
        assert g.class_id(x).is_unipotent
        assert g.class_id(x) == g.class_id(y)
        assert g.mul(x, y) == z
        _assert_generates(g, cert)

    @pytest.mark.parametrize("q, label", [(5, "tr:0"), (9, "unip:sq"), (9, "unip:nonsq")])
    def test_absent_in_both_modes(self, psl2, q, label):
        g = psl2(q)
        z = g.representative(_by_label(g, label))
        for unipotent_factors in (False, True):
            assert factorization_absence_reason(g, z, unipotent_factors) is not None
            assert product_of_conjugate_generators(g, z, unipotent_factors) is None

    @pytest.mark.parametrize("q", [7, 11, 13])
    def test_unipotent_targets_for_prime_q(self, psl2, q):
        g = psl2(q)
        for label in ("unip:sq", "unip:nonsq"):
            z = g.representative(_by_label(g, label))
            cert = product_of_conjugate_generators(g, z, unipotent_factors=True)
            x, y = (g.elem(*e) for e in cert.elements)
            assert g.class_id(x).is_unipotent
            assert g.mul(x, y) == z
            _assert_generates(g, cert)

    @pytest.mark.parametrize("q", [25, 27])
    def test_unipotent_targets_need_prime_q(self, psl2, q):
        g = psl2(q)
        reason = factorization_absence_reason(g, g.elem(1, 1, 0, 1), unipotent_factors=True)
        assert "prime" in reason


class TestValidation:
    """Test suite for certificate re-checking."""

    def test_rejects_proper_subgroup(self, g7):
        cert = GenCertificate(
            q=7,
            class_label="unip:sq",
            elements=[[1, 1, 0, 1], [1, 2, 0, 1]],
            relation="pair",
            closure_order=168,
        )
        with pytest.raises(ConstructionDefect):
            validate_certificate(g7, cert)

    def test_rejects_wrong_target(self, g7):
        cert = product_of_conjugate_generators(g7, g7.elem(3, 6, 1, 0))
        tampered = cert.model_copy(update={"target": [1, 1, 0, 1]})
        with pytest.raises(ConstructionDefect):
            validate_certificate(g7, tampered)

    def test_round_trips_through_json(self, g7):
        cert = generating_pair_in_class(g7, _by_label(g7, "tr:1"))
        validate_certificate(g7, GenCertificate.model_validate_json(cert.model_dump_json()))
