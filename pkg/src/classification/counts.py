"""
Counting formulas for traces and elements of PSL2(q).

trace_counts classifies every trace directly; element_counts evaluates the
closed forms. Both have formula/aggregate counterparts used for
reconciliation.
"""

import logging

from src.groups.models import ElementKind
from src.groups.psl2 import GroupCtx

from .models import ElementCounts, StructuralType, TraceCounts, TraceQuality
from .orders import is_q_good
from .traces import trace_kind

logger = logging.getLogger(__name__)


def trace_counts(ctx: GroupCtx) -> TraceCounts:
    """Count the q traces of F_q by type, and the bad ones for odd q."""
    tally = {kind: 0 for kind in StructuralType}
    bad = 0
    for alpha in ctx.field.elements:
        kind = trace_kind(ctx, alpha)
        tally[kind.structural] += 1
        if kind.quality == TraceQuality.BAD:
            bad += 1
    return TraceCounts(
        unipotent=tally[StructuralType.UNIPOTENT],
        split=tally[StructuralType.SPLIT],
        nonsplit=tally[StructuralType.NONSPLIT],
        bad=bad if ctx.odd else None,
    )


def trace_counts_formula(q: int) -> TraceCounts:
    """
    Closed forms: 1, (q-2)/2, q/2 for even q; 2, (q-3)/2, (q-1)/2 for odd q,
    with (q-1)/4 bad traces when q = 1 mod 4 and (q+1)/4 when q = 3 mod 4.
    """
    if q % 2 == 0:
        return TraceCounts(unipotent=1, split=(q - 2) // 2, nonsplit=q // 2)
    bad = (q - 1) // 4 if q % 4 == 1 else (q + 1) // 4
    return TraceCounts(unipotent=2, split=(q - 3) // 2, nonsplit=(q - 1) // 2, bad=bad)


def element_counts(ctx: GroupCtx) -> ElementCounts:
    """
    Closed-form element counts.

    Even q: q^2 - 1 unipotent, q(q+1)(q-2)/2 split, q^2(q-1)/2 non-split.
    Odd q: q^2 - 1 unipotent, q(q+1)(q-3)/4 split, q(q-1)^2/4 non-split, and
    |G|/4 semisimple elements whose order is not q-good.
    """
    q = ctx.q
    if not ctx.odd:
        return ElementCounts(
            unipotent=q * q - 1,
            split_ss=q * (q + 1) * (q - 2) // 2,
            nonsplit_ss=q * q * (q - 1) // 2,
        )
    return ElementCounts(
        unipotent=q * q - 1,
        split_ss=q * (q + 1) * (q - 3) // 4,
        nonsplit_ss=q * (q - 1) ** 2 // 4,
        non_q_good_ss=ctx.group_order // 4,
    )


def element_counts_from_classes(ctx: GroupCtx) -> ElementCounts:
    """The same counts aggregated from class sizes and class orders."""
    unipotent = split = nonsplit = not_good = 0
    for cid, size in ctx.all_class_ids():
        if cid.kind == ElementKind.UNIPOTENT:
            unipotent += size
        elif cid.kind == ElementKind.SPLIT:
            split += size
        elif cid.kind == ElementKind.NONSPLIT:
            nonsplit += size
        if cid.is_semisimple and not is_q_good(ctx.q, ctx.class_order(cid)):
            not_good += size
    return ElementCounts(
        unipotent=unipotent,
        split_ss=split,
        nonsplit_ss=nonsplit,
        non_q_good_ss=not_good if ctx.odd else None,
    )
