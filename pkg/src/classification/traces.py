"""
Trace Sets and Trace Classification

Computes T_q(n), the set of traces of lifts of elements of order n in
PSL2(q), from primitive roots of unity in F_q and F_{q^2}, and classifies a
single trace as unipotent/split/non-split and good/bad.

Design Considerations:
- Sets contain both members of every orbit {alpha, -alpha} for odd q
- Non-split traces b + b^q are computed in F_{q^2} and must be Frobenius-fixed
  before they are brought back into F_q
- Orders that PSL2(q) does not realize give the empty set
"""

import logging
from typing import FrozenSet, Iterable, Set

from src.groups.models import ElementKind
from src.groups.psl2 import GroupCtx
from src.utils.errors import ConstructionDefect, GroupError

from .models import StructuralType, TraceKind, TraceQuality

logger = logging.getLogger(__name__)

_STRUCTURAL = {
    ElementKind.UNIPOTENT: StructuralType.UNIPOTENT,
    ElementKind.SPLIT: StructuralType.SPLIT,
    ElementKind.NONSPLIT: StructuralType.NONSPLIT,
}


def _split_traces(ctx: GroupCtx, roots: Iterable[int]) -> Set[int]:
    f = ctx.field
    return {f.add(a, f.inv(a)) for a in roots}


def _nonsplit_traces(ctx: GroupCtx, roots: Iterable[int]) -> Set[int]:
    ext = ctx.field.ext
    traces = set()
    for b in roots:
        value = ext.add(b, ext.frobenius(b))
        if not ext.is_base(value):
            logger.error(f"b + b^q = {value} is not Frobenius-fixed in F_{ext.size}")
            raise ConstructionDefect(
                "relative trace left the base field",
                {"q": ctx.q, "element": b, "value": value},
            )
        traces.add(ext.restrict(value))
    return traces


def trace_set(ctx: GroupCtx, n: int) -> FrozenSet[int]:
    """
    T_q(n): traces of the lifts of all elements of order n.

    Args:
        ctx: The group PSL2(q)
        n: Element order, at least 2

    Returns:
        Frozen set of field encodings, empty when no element has order n
    """
    if not isinstance(n, int) or n < 2:
        raise GroupError(f"element order must be an integer > 1, got {n!r}", {"n": n})

    f, q = ctx.field, ctx.q
    if n == ctx.p:
        return frozenset({ctx.two, ctx.minus_two})

    if not ctx.odd:
        if (q - 1) % n == 0:
            return frozenset(_split_traces(ctx, f.primitive_roots(n)))
        if (q + 1) % n == 0:
            return frozenset(_nonsplit_traces(ctx, f.ext.primitive_roots(n)))
        return frozenset()

    if ((q - 1) // 2) % n == 0:
        traces = _split_traces(ctx, f.primitive_roots(2 * n))
    elif ((q + 1) // 2) % n == 0:
        traces = _nonsplit_traces(ctx, f.ext.primitive_roots(2 * n))
    else:
        return frozenset()
    return frozenset(traces | {f.neg(t) for t in traces})


def trace_kind(ctx: GroupCtx, alpha: int) -> TraceKind:
    """Structural type of alpha and, for odd q and alpha != +-2, whether it is good."""
    f = ctx.field
    f.check(alpha)
    structural = _STRUCTURAL[ctx.trace_type(alpha)]
    if not ctx.odd or structural == StructuralType.UNIPOTENT:
        return TraceKind(structural=structural)
    good = f.is_square(f.add(ctx.two, alpha)) or f.is_square(f.sub(ctx.two, alpha))
    return TraceKind(
        structural=structural,
        quality=TraceQuality.GOOD if good else TraceQuality.BAD,
    )
