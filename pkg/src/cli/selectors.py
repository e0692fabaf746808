"""
Class selectors: textual names for the conjugacy classes of PSL2(q).

    id              the identity
    unip            the unipotent class (even q)
    unip:sq         the class of U1 (odd q)
    unip:nonsq      the class of U1' (odd q)
    tr:<enc>        the semisimple class with a lift of trace <enc>
    ord:<n>[:<k>]   the k-th class of order n in listing order, k from 1
"""

from typing import List

from src.groups.models import ClassId, ElementKind
from src.groups.psl2 import GroupCtx
from src.utils.errors import SelectorError


def valid_selectors(ctx: GroupCtx) -> List[str]:
    """Every selector that resolves for this q, canonical labels first."""
    labels = []
    by_order = {}
    for cid, _ in ctx.all_class_ids():
        labels.append(cid.label)
        if not cid.is_identity:
            order = ctx.class_order(cid)
            by_order[order] = by_order.get(order, 0) + 1
    for order in sorted(by_order):
        labels.append(f"ord:{order}")
        if by_order[order] > 1:
            labels.extend(f"ord:{order}:{k}" for k in range(1, by_order[order] + 1))
    return labels


def _fail(ctx: GroupCtx, text: str, reason: str) -> SelectorError:
    return SelectorError(f"selector {text!r} {reason} for q = {ctx.q}", valid_selectors(ctx))


def _parse_int(ctx: GroupCtx, text: str, part: str) -> int:
    try:
        return int(part)
    except ValueError:
        raise _fail(ctx, text, f"has a non-integer part {part!r}") from None


def resolve_selector(ctx: GroupCtx, text: str) -> ClassId:
    """
    Resolve a selector to exactly one class.

    Raises:
        SelectorError: If the selector is malformed or names no class of PSL2(q)
    """
    head, _, rest = text.strip().partition(":")
    ids = [cid for cid, _ in ctx.all_class_ids()]

    if head == "id" and not rest:
        return ClassId(ElementKind.IDENTITY)

    if head == "unip":
        matches = [cid for cid in ids if cid.is_unipotent and cid.label == text.strip()]
        if len(matches) != 1:
            raise _fail(ctx, text, "names no unipotent class")
        return matches[0]

    if head == "tr" and rest:
        alpha = _parse_int(ctx, text, rest)
        if not 0 <= alpha < ctx.q:
            raise _fail(ctx, text, "is not a field element")
        if ctx.trace_type(alpha) == ElementKind.UNIPOTENT:
            raise _fail(ctx, text, "is a unipotent trace; use a unip selector")
        return ClassId(ctx.trace_type(alpha), trace_orbit=ctx.trace_orbit(alpha))

    if head == "ord" and rest:
        order_text, _, k_text = rest.partition(":")
        order = _parse_int(ctx, text, order_text)
        k = _parse_int(ctx, text, k_text) if k_text else 1
        matches = [cid for cid in ids if not cid.is_identity and ctx.class_order(cid) == order]
        if not 1 <= k <= len(matches):
            raise _fail(ctx, text, f"selects class {k} of {len(matches)} of order {order}")
        return matches[k - 1]

    raise _fail(ctx, text, "is not recognized")
