"""
Brute-Force Group Oracle

Enumerates PSL2(q) element by element and answers class-product,
closure, conjugacy and generation questions by exhaustive search, as an
independent check on the closed forms.

Design Considerations:
- Enumeration runs over first rows in enc order and solves the second row
  from the determinant, so tables are reproducible run to run
- The table is read-only once built; every query is a pure function of it
- Conjugacy is recomputed from orbits under an SL2 generating set and never
  from traces, so it can disagree with class_id
- Class squares fix the left factor: C^2 is a union of classes, so x0*C
  already meets every class of C^2
"""

import logging
from collections import deque
from functools import cached_property
from types import MappingProxyType
from typing import Dict, FrozenSet, Iterator, List, Mapping, Optional, Sequence, Tuple

from src.classification.models import ElementCounts
from src.classification.orders import is_q_good
from src.fields.finite_field import FieldCtx
from src.groups.models import ClassId, ElementKind, Mat2, PElem
from src.groups.psl2 import GroupCtx
from src.utils.errors import BudgetExceededError, ConstructionDefect, GroupError

logger = logging.getLogger(__name__)


class GroupTable:
    """
    Every element of PSL2(q), indexed, with its conjugacy class.

    Attributes:
        ctx: The group the table enumerates
        elements: Elements in enumeration order
        index: Canonical lift -> position in elements
        class_partition: ClassId -> positions of the members, in listing order
    """

    def __init__(self, ctx: GroupCtx, reps: Sequence[Mat2]):
        self.ctx = ctx
        self.elements: Tuple[PElem, ...] = tuple(PElem(m, ctx.q) for m in reps)
        self.index: Mapping[Mat2, int] = MappingProxyType(
            {x.rep: i for i, x in enumerate(self.elements)}
        )
        self.class_ids: Tuple[ClassId, ...] = tuple(self._classify())

        partition: Dict[ClassId, List[int]] = {}
        for i, cid in enumerate(self.class_ids):
            partition.setdefault(cid, []).append(i)
        self.class_partition: Mapping[ClassId, Tuple[int, ...]] = MappingProxyType({
            cid: tuple(partition[cid]) for cid in sorted(partition, key=ClassId.sort_key)
        })

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"GroupTable(q={self.ctx.q}, elements={len(self)}, classes={len(self.class_partition)})"

    def _classify(self) -> Iterator[ClassId]:
        ctx = self.ctx
        kinds: Dict[int, ElementKind] = {}
        for x in self.elements:
            if ctx.is_central(x.rep):
                yield ClassId(ElementKind.IDENTITY)
                continue
            alpha = ctx.trace(x.rep)
            if alpha not in kinds:
                kinds[alpha] = ctx.trace_type(alpha)
            if kinds[alpha] == ElementKind.UNIPOTENT:
                yield ctx.class_id(x)
            else:
                yield ClassId(kinds[alpha], trace_orbit=ctx.trace_orbit(alpha))

    def position(self, m: Mat2) -> int:
        """Index of the element with lift m (either sign)."""
        return self.index[self.ctx.canonical_rep(m)]

    def class_of(self, i: int) -> ClassId:
        return self.class_ids[i]

    def members(self, cid: ClassId) -> Tuple[int, ...]:
        try:
            return self.class_partition[cid]
        except KeyError:
            raise GroupError(
                f"{cid} is not a class of PSL2({self.ctx.q})",
                {"class": str(cid), "q": self.ctx.q},
            ) from None

    def multiply(self, i: int, j: int) -> int:
        ctx = self.ctx
        return self.position(ctx.mat_mul(self.elements[i].rep, self.elements[j].rep))

    def inverse(self, i: int) -> int:
        return self.position(self.ctx.mat_inv(self.elements[i].rep))

    @cached_property
    def orders(self) -> Tuple[int, ...]:
        """Element orders by repeated multiplication."""
        ctx = self.ctx
        orders = []
        for x in self.elements:
            n, power = 1, x.rep
            while not ctx.is_central(power):
                power = ctx.mat_mul(power, x.rep)
                n += 1
            orders.append(n)
        return tuple(orders)


def _second_rows(field: FieldCtx, a: int, b: int) -> Iterator[Mat2]:
    """Every (c, d) with ad - bc = 1 for a fixed non-zero first row."""
    f = field
    if a:
        for c in f.elements:
            yield Mat2(a, b, c, f.div(f.add(1, f.mul(b, c)), a))
    else:
        c = f.neg(f.inv(b))
        for d in f.elements:
            yield Mat2(a, b, c, d)


def enumerate_group(ctx: GroupCtx, budget: Optional[int] = None) -> GroupTable:
    """
    Build the full element table of PSL2(q).

    Raises:
        BudgetExceededError: If |G| exceeds the enumeration budget
        ConstructionDefect: If the scan does not produce q(q^2 - 1)/d elements
    """
    budget = budget or ctx.settings.ENUMERATION_BUDGET
    if ctx.group_order > budget:
        raise BudgetExceededError(
            f"PSL2({ctx.q}) has {ctx.group_order} elements, over the budget of {budget}",
            {"q": ctx.q, "group_order": ctx.group_order, "budget": budget},
        )

    f = ctx.field
    reps: Dict[Mat2, None] = {}
    for a in f.elements:
        for b in f.elements:
            if a == 0 and b == 0:
                continue
            for m in _second_rows(f, a, b):
                reps.setdefault(ctx.canonical_rep(m), None)

    if len(reps) != ctx.group_order:
        logger.error(f"Enumerated {len(reps)} elements of PSL2({ctx.q}), expected {ctx.group_order}")
        raise ConstructionDefect(
            "enumeration produced the wrong number of elements",
            {"q": ctx.q, "found": len(reps), "expected": ctx.group_order},
        )
    table = GroupTable(ctx, list(reps))
    logger.info(f"Enumerated {table!r}")
    return table


# Class products

def class_square_brute(table: GroupTable, cid: ClassId, x0: Optional[PElem] = None) -> FrozenSet[ClassId]:
    """
    The classes met by C^2, from the products x0 * b with b in C.

    x0 defaults to the class representative and must lie in C.
    """
    ctx = table.ctx
    members = table.members(cid)
    x0 = ctx.representative(cid) if x0 is None else x0
    i0 = table.position(x0.rep)
    if table.class_of(i0) != cid:
        raise GroupError(f"{x0.as_list()} does not lie in {cid}", {"class": str(cid)})
    return frozenset(table.class_of(table.multiply(i0, j)) for j in members)


def square_witness(table: GroupTable, cid: ClassId, target: ClassId) -> Optional[Tuple[PElem, PElem]]:
    """x0 and b in C with x0*b in the target class, or None."""
    i0 = table.position(table.ctx.representative(cid).rep)
    for j in table.members(cid):
        if table.class_of(table.multiply(i0, j)) == target:
            return table.elements[i0], table.elements[j]
    return None


# Closures

def closure(table: GroupTable, x: PElem, y: PElem) -> FrozenSet[int]:
    """Indices of the subgroup generated by x and y, breadth-first."""
    gens = [table.position(x.rep), table.position(y.rep)]
    gens += [table.inverse(g) for g in gens]
    identity = table.position(table.ctx.identity.rep)

    seen = {identity}
    queue = deque([identity])
    while queue:
        h = queue.popleft()
        for g in gens:
            k = table.multiply(h, g)
            if k not in seen:
                seen.add(k)
                queue.append(k)
        # a subgroup of more than half the elements is the whole group
        if 2 * len(seen) > len(table):
            return frozenset(range(len(table)))
    return frozenset(seen)


def _generates(table: GroupTable, x: PElem, y: PElem) -> bool:
    return len(closure(table, x, y)) == len(table)


# Conjugacy

def sl2_generators(ctx: GroupCtx) -> List[Mat2]:
    """Elementary matrices [[1, t], [0, 1]] and [[1, 0], [t, 1]] for t = 1, x, ..., x^(e-1)."""
    basis = [ctx.p ** i for i in range(ctx.field.e)]
    return [Mat2(1, t, 0, 1) for t in basis] + [Mat2(1, 0, t, 1) for t in basis]


def _orbits(ctx: GroupCtx, points: Sequence[Mat2], normalize) -> List[FrozenSet[Mat2]]:
    gens = [(g, ctx.mat_inv(g)) for g in sl2_generators(ctx)]
    remaining = set(points)
    orbits = []
    for start in points:
        if start not in remaining:
            continue
        orbit = {start}
        queue = deque([start])
        while queue:
            m = queue.popleft()
            for g, g_inv in gens:
                k = normalize(ctx.mat_mul(ctx.mat_mul(g, m), g_inv))
                if k not in orbit:
                    orbit.add(k)
                    queue.append(k)
        remaining -= orbit
        orbits.append(frozenset(orbit))
    return orbits


def conjugacy_classes_brute(table: GroupTable) -> List[FrozenSet[int]]:
    """Conjugacy classes as index sets, ordered by their first element."""
    ctx = table.ctx
    orbits = _orbits(ctx, [x.rep for x in table.elements], ctx.canonical_rep)
    classes = [frozenset(table.index[m] for m in orbit) for orbit in orbits]
    logger.debug(f"PSL2({ctx.q}) has {len(classes)} conjugacy classes by orbit search")
    return sorted(classes, key=min)


def unipotent_orbits_brute(ctx: GroupCtx) -> List[FrozenSet[Mat2]]:
    """SL2(q)-conjugacy orbits of the non-identity matrices of trace 2."""
    f = ctx.field
    points = []
    for a in f.elements:
        d = f.sub(ctx.two, a)
        # ad - bc = 1 with a + d = 2 forces bc = -(a - 1)^2
        rhs = f.neg(f.mul(f.sub(a, 1), f.sub(a, 1)))
        for b in f.elements:
            if b:
                points.append(Mat2(a, b, f.div(rhs, b), d))
            elif rhs == 0:
                points.extend(Mat2(a, 0, c, d) for c in f.elements if c)
    return _orbits(ctx, points, lambda m: m)


# Generation

def _require_small(table: GroupTable) -> None:
    limit = table.ctx.settings.BRUTE_GENERATION_LIMIT
    if len(table) > limit:
        raise BudgetExceededError(
            f"brute-force generation is limited to groups of order {limit}",
            {"q": table.ctx.q, "group_order": len(table), "limit": limit},
        )


def generating_pair_brute(table: GroupTable, cid: ClassId) -> Optional[Tuple[PElem, PElem]]:
    """
    The first y in C with <x0, y> = G for the class representative x0.

    Any generating pair is conjugate to one with first factor x0, so None
    means the class has no generating pair.
    """
    _require_small(table)
    x0 = table.ctx.representative(cid)
    for j in table.members(cid):
        y = table.elements[j]
        if _generates(table, x0, y):
            return x0, y
    return None


def generating_triple_brute(table: GroupTable, cid: ClassId) -> Optional[Tuple[PElem, PElem, PElem]]:
    """The first x0, y, z in C with x0*y*z = 1 and <x0, y> = G, or None."""
    _require_small(table)
    ctx = table.ctx
    x0 = ctx.representative(cid)
    i0 = table.position(x0.rep)
    for j in table.members(cid):
        k = table.inverse(table.multiply(i0, j))
        if table.class_of(k) != cid:
            continue
        y = table.elements[j]
        if _generates(table, x0, y):
            return x0, y, table.elements[k]
    return None


def factorization_brute(
    table: GroupTable,
    z: PElem,
    unipotent_factors: bool = False,
) -> Optional[Tuple[PElem, PElem]]:
    """
    The first conjugate x, y with xy = z and <x, y> = G, or None.

    Every x in the group is tried with y = x^-1 z. Without unipotent_factors
    any non-identity class counts, matching product_of_conjugate_generators.
    """
    _require_small(table)
    k = table.position(z.rep)
    for i in range(len(table)):
        cid = table.class_of(i)
        if cid.is_identity or (unipotent_factors and not cid.is_unipotent):
            continue
        j = table.multiply(table.inverse(i), k)
        if table.class_of(j) != cid:
            continue
        x, y = table.elements[i], table.elements[j]
        if _generates(table, x, y):
            return x, y
    return None


# Counting

def element_counts_brute(table: GroupTable) -> ElementCounts:
    """Element counts by type from the enumerated group."""
    ctx = table.ctx
    tally = {kind: 0 for kind in ElementKind}
    not_good = 0
    for cid, order in zip(table.class_ids, table.orders):
        tally[cid.kind] += 1
        if cid.is_semisimple and not is_q_good(ctx.q, order):
            not_good += 1
    return ElementCounts(
        unipotent=tally[ElementKind.UNIPOTENT],
        split_ss=tally[ElementKind.SPLIT],
        nonsplit_ss=tally[ElementKind.NONSPLIT],
        non_q_good_ss=not_good if ctx.odd else None,
    )


def trace_sets_brute(table: GroupTable) -> Dict[int, FrozenSet[int]]:
    """Order n -> traces of both lifts of every element of order n, for n > 1."""
    ctx = table.ctx
    traces: Dict[int, set] = {}
    for x, order in zip(table.elements, table.orders):
        if order == 1:
            continue
        alpha = ctx.trace(x.rep)
        traces.setdefault(order, set()).update({alpha, ctx.field.neg(alpha)})
    return {n: frozenset(values) for n, values in sorted(traces.items())}
