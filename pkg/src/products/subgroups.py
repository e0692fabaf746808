"""
Subgroup Classification

Classifies the subgroup generated by two elements of PSL2(q) as structural,
small, subfield or the whole group.

Design Considerations:
- Structural is decided geometrically: the generators fix a common point of
  the projective line over F_{q^2}
- Full and subfield kinds are decided by the closure order, with traces
  confirming subfield membership
- Small kinds (dihedral, A4, S4, A5) are decided by the element-order census,
  since the order alone is ambiguous
"""

import logging
from collections import Counter
from typing import Dict, FrozenSet, Iterable, Optional

from src.groups.models import Mat2, PElem
from src.groups.psl2 import GroupCtx
from src.utils.errors import ConstructionDefect

from .models import SubgroupKind, SubgroupTag

logger = logging.getLogger(__name__)

INFINITY = -1

SMALL_CENSUSES = {
    "A4": {1: 1, 2: 3, 3: 8},
    "S4": {1: 1, 2: 9, 3: 8, 4: 6},
    "A5": {1: 1, 2: 15, 3: 20, 5: 24},
}


def fixed_points(ctx: GroupCtx, m: Mat2) -> FrozenSet[int]:
    """
    Points z of P^1(F_{q^2}) with (az + b)/(cz + d) = z.

    Points are F_{q^2} encodings, with INFINITY for [1 : 0].
    """
    f = ctx.field
    ext = f.ext
    if m.c == 0:
        points = {INFINITY}
        if m.a != m.d:
            points.add(ext.embed(f.div(m.b, f.sub(m.d, m.a))))
        return frozenset(points)
    # c z^2 + (d - a) z - b = 0
    linear = f.div(f.sub(m.d, m.a), m.c)
    constant = f.neg(f.div(m.b, m.c))
    return frozenset(ext.solve_monic_quadratic(ext.embed(linear), ext.embed(constant)))


def share_fixed_point(ctx: GroupCtx, x: PElem, y: PElem) -> bool:
    """True iff x and y have a common eigenvector over F_{q^2}."""
    if ctx.is_central(x.rep) or ctx.is_central(y.rep):
        return True
    return bool(fixed_points(ctx, x.rep) & fixed_points(ctx, y.rep))


def order_census(ctx: GroupCtx, elements: Iterable[Mat2]) -> Dict[int, int]:
    """Number of elements of each order."""
    census = Counter(ctx.order(PElem(rep, ctx.q)) for rep in elements)
    return dict(sorted(census.items()))


def _small_shape(order: int, census: Dict[int, int]) -> Optional[str]:
    for shape, expected in SMALL_CENSUSES.items():
        if census == expected:
            return shape
    if order % 2 == 0 and order >= 4:
        half = order // 2
        if census.get(2, 0) >= half and max(census) == half:
            return "dihedral"
    return None


def _proper_subfields(ctx: GroupCtx):
    e = ctx.field.e
    for f in range(1, e):
        if e % f == 0:
            yield f, ctx.p ** f


def subgroup_kind(ctx: GroupCtx, x: PElem, y: PElem, budget: Optional[int] = None) -> SubgroupKind:
    """
    Classify <x, y>.

    Raises:
        BudgetExceededError: If the closure exceeds the enumeration budget
        ConstructionDefect: If the closure matches no subgroup family
    """
    closure = ctx.generate([x, y], budget)
    order = len(closure)

    if share_fixed_point(ctx, x, y):
        return SubgroupKind(tag=SubgroupTag.STRUCTURAL, order=order)
    if order == ctx.group_order:
        return SubgroupKind(tag=SubgroupTag.FULL, order=order)

    f = ctx.field
    e = f.e
    for degree, q1 in _proper_subfields(ctx):
        psl_order = q1 * (q1 * q1 - 1) // (2 if q1 % 2 else 1)
        if order == psl_order and all(f.pow(ctx.trace(m), q1) == ctx.trace(m) for m in closure):
            return SubgroupKind(tag=SubgroupTag.SUBFIELD_PSL, order=order, q1=q1)
        if ctx.odd and (e // degree) % 2 == 0 and order == q1 * (q1 * q1 - 1):
            return SubgroupKind(tag=SubgroupTag.SUBFIELD_PGL, order=order, q1=q1)

    census = order_census(ctx, closure)
    shape = _small_shape(order, census)
    if shape is not None:
        return SubgroupKind(tag=SubgroupTag.SMALL, order=order, shape=shape, order_census=census)

    logger.error(f"Closure of order {order} in PSL2({ctx.q}) matches no subgroup family: {census}")
    raise ConstructionDefect(
        "unclassified subgroup",
        {"q": ctx.q, "order": order, "census": census},
    )
