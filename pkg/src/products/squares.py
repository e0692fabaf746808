"""
Closed-Form Class Squares

The square C^2 = {xy : x, y in C} of every non-identity class of PSL2(q), as
a symbolic union of classes, together with its expansion into explicit
class labels and two explicit product constructions used as cross-checks.

Design Considerations:
- Even q: split and unipotent classes square to G, non-split classes to
  G minus the unipotents
- Odd q: semisimple classes of order > 2 square to G; the order-2 class
  squares to G when q = 1 mod 4 and to G minus the unipotents otherwise;
  unipotent classes square to the unipotents, the semisimple classes of
  q-good order and, when q = 1 mod 4, the identity
"""

import logging
from typing import FrozenSet, Iterable, Optional, Tuple

from src.classification.orders import is_q_good
from src.groups.models import ClassId, ElementKind, Mat2, PElem
from src.groups.psl2 import GroupCtx
from src.utils.errors import GroupError

from .macbeath import iter_trace_triples
from .models import SetDescr

logger = logging.getLogger(__name__)


def require_closed_form_range(ctx: GroupCtx, cid: ClassId) -> None:
    """Class-product statements cover non-identity classes of PSL2(q), q > 3."""
    ctx.validate_class_id(cid)
    if cid.is_identity:
        raise GroupError("the identity class is excluded", {"q": ctx.q})
    if ctx.q <= 3:
        raise GroupError(
            f"class products are only described for q > 3, got q = {ctx.q}",
            {"q": ctx.q},
        )


def class_square_closed(ctx: GroupCtx, cid: ClassId) -> SetDescr:
    """The closed form of C^2 for the class cid."""
    require_closed_form_range(ctx, cid)

    if not ctx.odd:
        if cid.kind == ElementKind.NONSPLIT:
            return SetDescr.ALL_MINUS_UNIPOTENTS
        return SetDescr.WHOLE_GROUP

    if cid.is_unipotent:
        if ctx.q % 4 == 1:
            return SetDescr.UNIPOTENTS_PLUS_GOOD_SS_PLUS_IDENTITY
        return SetDescr.UNIPOTENTS_PLUS_GOOD_SS
    if cid.trace_orbit == 0 and ctx.q % 4 == 3:
        # order 2, non-split
        return SetDescr.ALL_MINUS_UNIPOTENTS
    return SetDescr.WHOLE_GROUP


def expand_set_descr(ctx: GroupCtx, descr: SetDescr) -> FrozenSet[ClassId]:
    """The explicit classes making up a symbolic class union."""
    ids = [cid for cid, _ in ctx.all_class_ids()]
    if descr == SetDescr.WHOLE_GROUP:
        return frozenset(ids)
    if descr == SetDescr.ALL_MINUS_UNIPOTENTS:
        return frozenset(cid for cid in ids if not cid.is_unipotent)

    selected = {cid for cid in ids if cid.is_unipotent}
    selected.update(
        cid for cid in ids
        if cid.is_semisimple and is_q_good(ctx.q, ctx.class_order(cid))
    )
    if descr == SetDescr.UNIPOTENTS_PLUS_GOOD_SS_PLUS_IDENTITY:
        selected.update(cid for cid in ids if cid.is_identity)
    return frozenset(selected)


def total_size(ctx: GroupCtx, ids: Iterable[ClassId]) -> int:
    """Number of elements in a union of classes."""
    return sum(ctx.class_size(cid) for cid in ids)


def unipotent_product_trace(ctx: GroupCtx, m: Mat2) -> int:
    """tr(U1 * M U1 M^-1), which equals 2 - c^2 for M = [[a, b], [c, d]]."""
    u1 = ctx.unipotent()
    conjugate = ctx.mat_mul(ctx.mat_mul(m, u1), ctx.mat_inv(m))
    return ctx.trace(ctx.mat_mul(u1, conjugate))


def unipotent_witness_products(ctx: GroupCtx, cid: ClassId) -> Optional[Tuple[PElem, PElem]]:
    """
    Elements x, y of a semisimple class with xy unipotent, or None.

    The realizations of (alpha, alpha, +-2) with A fixed run through every
    admissible B, so None means C^2 contains no unipotent element.
    """
    require_closed_form_range(ctx, cid)
    if not cid.is_semisimple:
        raise GroupError("unipotent witnesses are only defined for semisimple classes")

    alpha = cid.trace_orbit
    for gamma in sorted({ctx.two, ctx.minus_two}):
        for a, b, c in iter_trace_triples(ctx, alpha, alpha, gamma):
            if ctx.is_central(c):
                continue
            x = PElem(ctx.canonical_rep(a), ctx.q)
            y = PElem(ctx.canonical_rep(b), ctx.q)
            logger.debug(f"Unipotent witness in {cid}²: {x.as_list()} • {y.as_list()}")
            return x, y
    return None
