"""
Generation Certificates

Constructs generating pairs and triples inside a single conjugacy class and
factorizations of an element as a product of two conjugate generators, each
certified by enumerating the generated subgroup.

Design Considerations:
- Candidates come from trace-triple realizations; a non-singular triple
  determines its pair up to conjugation, so one realization per triple is
  enough
- Generation is never inferred from traces: every candidate is accepted only
  when its closure is the whole group
- Wrong unipotent square classes are repaired with the diagonal twist, which
  is an automorphism
- Seeded random conjugates are the last resort, bounded by RETRY_BUDGET
"""

import logging
import random
from itertools import chain, islice
from typing import Iterator, List, Optional, Sequence, Tuple

from src.classification.orders import is_q_good, is_q_minimal, orders_table
from src.classification.traces import trace_set
from src.groups.models import ClassId, ElementKind, Mat2, PElem
from src.groups.psl2 import GroupCtx
from src.utils.errors import ConstructionDefect, GroupError

from .macbeath import is_singular, iter_trace_triples
from .models import GenCertificate
from .squares import require_closed_form_range

logger = logging.getLogger(__name__)

Pair = Tuple[PElem, PElem]

# Field orders where some products of conjugate generators need unipotent (trace -2) factors
UNIPOTENT_FALLBACK_Q = (5, 7)


# Presence rules

def pair_absence_reason(ctx: GroupCtx, cid: ClassId) -> Optional[str]:
    """Why cid has no generating pair, or None when it has one."""
    require_closed_form_range(ctx, cid)
    if ctx.class_order(cid) == 2:
        return "two involutions generate a dihedral group, so a class of involutions has no generating pair"
    if cid.is_unipotent and ctx.q == 9:
        return "no two unipotent elements of one class generate PSL2(9)"
    return None


def triple_absence_reason(ctx: GroupCtx, cid: ClassId) -> Optional[str]:
    """Why cid has no generating triple with product 1, or None when it has one."""
    require_closed_form_range(ctx, cid)
    if cid.is_unipotent:
        if ctx.field.e != 1:
            return "unipotent generating triples exist only when q is prime"
        return None
    order = ctx.class_order(cid)
    if order <= 3:
        return f"elements of order {order} never form a generating triple with product 1"
    if not is_q_minimal(ctx.q, order):
        return f"order {order} is not {ctx.q}-minimal, so the triple lies in a subfield subgroup"
    return None


def factorization_absence_reason(ctx: GroupCtx, z: PElem, unipotent_factors: bool = False) -> Optional[str]:
    """
    Why z is not a product of two conjugate generators of the requested type.

    Without unipotent_factors any conjugate generators count; for q = 5 and
    q = 7 some targets are reached only by unipotent factors.
    """
    _require_factorable(ctx, z)
    kind = ctx.elem_type(z)
    order = ctx.order(z)
    if not unipotent_factors:
        if not ctx.odd and kind == ElementKind.UNIPOTENT:
            return "for even q only semisimple elements are products of two conjugate generators"
        if ctx.q == 5 and order == 2:
            return "no involution of PSL2(5) is a product of two conjugate generators"
        if ctx.q == 9 and kind == ElementKind.UNIPOTENT:
            return "no unipotent element of PSL2(9) is a product of two conjugate generators"
        return None
    if not ctx.odd:
        return "for even q unipotent elements are involutions and two involutions generate a dihedral group"
    if ctx.q == 9:
        return "no two conjugate unipotent elements generate PSL2(9)"
    if kind == ElementKind.UNIPOTENT:
        if ctx.field.e != 1:
            return "unipotent generators with a unipotent product exist only when q is prime"
        return None
    if not is_q_minimal(ctx.q, order):
        return f"order {order} is not {ctx.q}-minimal"
    if not is_q_good(ctx.q, order):
        return f"order {order} is not {ctx.q}-good"
    return None


def _require_factorable(ctx: GroupCtx, z: PElem) -> None:
    ctx._check(z)
    if ctx.is_central(z.rep):
        raise GroupError("the identity is excluded", {"q": ctx.q})
    if ctx.q <= 3:
        raise GroupError(
            f"factorizations are only described for q > 3, got q = {ctx.q}",
            {"q": ctx.q},
        )


# Certificates

def _generates(ctx: GroupCtx, x: PElem, y: PElem) -> bool:
    return len(ctx.generate([x, y])) == ctx.group_order


def _certificate(
    ctx: GroupCtx,
    elements: Sequence[PElem],
    relation: str,
    target: Optional[PElem] = None,
) -> GenCertificate:
    cert = GenCertificate(
        q=ctx.q,
        class_label=ctx.class_id(elements[0]).label,
        elements=[x.as_list() for x in elements],
        relation=relation,
        closure_order=ctx.group_order,
        target=target.as_list() if target is not None else None,
    )
    validate_certificate(ctx, cert)
    return cert


def validate_certificate(ctx: GroupCtx, cert: GenCertificate) -> None:
    """
    Re-check a certificate from its serialized form.

    Raises:
        ConstructionDefect: If any relation the certificate claims fails
    """
    elements = [ctx.elem(*entries) for entries in cert.elements]
    problems: List[str] = []
    if len({ctx.class_id(x) for x in elements}) != 1:
        problems.append("elements lie in different classes")
    if cert.relation == "triple-product-1" and ctx.product(elements) != ctx.identity:
        problems.append("product is not the identity")
    if cert.relation == "product":
        if cert.target is None or ctx.product(elements) != ctx.elem(*cert.target):
            problems.append("product differs from the target")
    closure = len(ctx.generate(elements[:2]))
    if closure != ctx.group_order or cert.closure_order != closure:
        problems.append(f"closure order {closure} differs from |G| = {ctx.group_order}")
    if problems:
        logger.error(f"Certificate for PSL2({ctx.q}) failed validation: {problems}")
        raise ConstructionDefect(
            "generation certificate failed validation",
            {"q": ctx.q, "problems": problems, "certificate": cert.model_dump()},
        )


def _first_generating(ctx: GroupCtx, candidates: Iterator[Pair], budget: int) -> Optional[Pair]:
    for x, y in islice(candidates, budget):
        if _generates(ctx, x, y):
            return x, y
    return None


def _lift(ctx: GroupCtx, m: Mat2) -> PElem:
    return PElem(ctx.canonical_rep(m), ctx.q)


def _first_realization(ctx: GroupCtx, alpha: int, beta: int, gamma: int):
    return next(iter_trace_triples(ctx, alpha, beta, gamma), None)


# Generating pairs

def _product_traces(ctx: GroupCtx) -> List[int]:
    """Product traces to try: -2 first for prime odd q, then T_q((q+1)/d), then the rest."""
    preferred: List[int] = []
    if ctx.odd and ctx.field.e == 1:
        preferred.append(ctx.minus_two)
    preferred.extend(t for t in sorted(trace_set(ctx, (ctx.q + 1) // ctx.d)) if t not in preferred)
    return preferred + [t for t in ctx.field.elements if t not in preferred]


def _semisimple_pair_candidates(ctx: GroupCtx, cid: ClassId) -> Iterator[Pair]:
    alpha = cid.trace_orbit
    for gamma in _product_traces(ctx):
        if is_singular(ctx.field, alpha, alpha, gamma):
            continue
        triple = _first_realization(ctx, alpha, alpha, gamma)
        if triple is None:
            continue
        x, y = _lift(ctx, triple[0]), _lift(ctx, triple[1])
        if ctx.class_id(x) == cid and ctx.class_id(y) == cid:
            yield x, y


def _unipotent_pair_candidates(ctx: GroupCtx, cid: ClassId) -> Iterator[Pair]:
    row = orders_table(ctx.q)
    preferred: List[int] = []
    for t in row.minimal_good:
        preferred.extend(g for g in sorted(trace_set(ctx, t)) if g not in preferred)
    gammas = preferred + [g for g in ctx.field.elements if g not in preferred]

    for gamma in gammas:
        if gamma in (ctx.two, ctx.minus_two):
            continue
        triple = _first_realization(ctx, ctx.two, ctx.two, gamma)
        if triple is None:
            continue
        a, b, _ = triple
        x, y = _lift(ctx, a), _lift(ctx, b)
        if ctx.class_id(x) != ctx.class_id(y):
            continue
        if ctx.class_id(x) != cid:
            x, y = _lift(ctx, ctx.twist(a)), _lift(ctx, ctx.twist(b))
        yield x, y


def _random_pair(ctx: GroupCtx, cid: ClassId, seed: int) -> Optional[Pair]:
    rng = random.Random(seed)
    x = ctx.representative(cid)
    budget = ctx.settings.RETRY_BUDGET
    logger.warning(f"Falling back to {budget} random conjugates for {cid} in PSL2({ctx.q})")
    for attempt in range(budget):
        y = ctx.conjugate(x, ctx.random_element(rng))
        if _generates(ctx, x, y):
            logger.debug(f"Random conjugate accepted after {attempt + 1} attempts")
            return x, y
    return None


def generating_pair_in_class(ctx: GroupCtx, cid: ClassId, seed: Optional[int] = None) -> Optional[GenCertificate]:
    """
    Two elements of cid generating PSL2(q), or None for the classes without any.

    Raises:
        GroupError: For the identity class or q <= 3
        ConstructionDefect: If no pair is found within the retry budget
    """
    if pair_absence_reason(ctx, cid) is not None:
        return None
    seed = ctx.settings.DEFAULT_SEED if seed is None else seed
    budget = ctx.settings.RETRY_BUDGET

    if cid.is_semisimple:
        candidates = _semisimple_pair_candidates(ctx, cid)
    else:
        candidates = _unipotent_pair_candidates(ctx, cid)
    pair = _first_generating(ctx, candidates, budget) or _random_pair(ctx, cid, seed)
    if pair is None:
        logger.error(f"No generating pair found in {cid} for PSL2({ctx.q})")
        raise ConstructionDefect(
            "retry budget exhausted while searching for a generating pair",
            {"q": ctx.q, "class": cid.label},
        )
    logger.info(f"Generating pair in {cid} for PSL2({ctx.q}) found")
    return _certificate(ctx, pair, "pair")


# Generating triples

def _unipotent_triple(ctx: GroupCtx) -> Tuple[Mat2, Mat2, Mat2]:
    """
    U_-1 with its conjugates by M = [[a+1, -a/2-1], [2, -1]] and K = [[a, -1/2], [2, 0]].

    a is the smallest element of F_p outside {0, 2, -2}.
    """
    f = ctx.field
    a = next(v for v in range(1, ctx.p) if v not in (ctx.two, ctx.minus_two))
    half = f.inv(ctx.two)
    m = Mat2(f.add(a, 1), f.sub(f.neg(f.mul(a, half)), 1), ctx.two, f.neg(1))
    k = Mat2(a, f.neg(half), ctx.two, 0)
    u = ctx.unipotent(sign=-1)
    b = ctx.mat_mul(ctx.mat_mul(m, u), ctx.mat_inv(m))
    c = ctx.mat_mul(ctx.mat_mul(k, u), ctx.mat_inv(k))
    return u, b, c


def _semisimple_triple_candidates(ctx: GroupCtx, cid: ClassId) -> Iterator[Tuple[PElem, PElem, PElem]]:
    alpha = cid.trace_orbit
    f = ctx.field
    # (a, a, a) and (a, a, -a) cover every sign pattern up to pairwise flips
    for gamma in sorted({alpha, f.neg(alpha)}):
        if is_singular(f, alpha, alpha, gamma):
            continue
        for triple in islice(iter_trace_triples(ctx, alpha, alpha, gamma), ctx.settings.RETRY_BUDGET):
            x, y, z = (_lift(ctx, m) for m in triple)
            if all(ctx.class_id(e) == cid for e in (x, y, z)):
                yield x, y, z
                break


def _random_triple(ctx: GroupCtx, cid: ClassId, seed: int) -> Optional[Tuple[PElem, PElem, PElem]]:
    rng = random.Random(seed)
    x = ctx.representative(cid)
    budget = ctx.settings.RETRY_BUDGET
    logger.warning(f"Falling back to {budget} random conjugates for a triple in {cid} of PSL2({ctx.q})")
    for _ in range(budget):
        y = ctx.conjugate(x, ctx.random_element(rng))
        z = ctx.inv(ctx.mul(x, y))
        if ctx.class_id(z) == cid and _generates(ctx, x, y):
            return x, y, z
    return None


def generating_triple_in_class(ctx: GroupCtx, cid: ClassId, seed: Optional[int] = None) -> Optional[GenCertificate]:
    """
    x, y, z in cid with xyz = 1 and <x, y> = PSL2(q), or None when impossible.

    Present exactly for semisimple classes of q-minimal order > 3 and, for
    prime q, the unipotent classes.
    """
    if triple_absence_reason(ctx, cid) is not None:
        return None

    if cid.is_unipotent:
        u, b, c = _unipotent_triple(ctx)
        if not ctx.is_central(ctx.mat_mul(ctx.mat_mul(u, b), c)):
            raise ConstructionDefect("unipotent triple does not multiply to 1", {"q": ctx.q})
        if ctx.class_id(_lift(ctx, u)) != cid:
            u, b, c = ctx.twist(u), ctx.twist(b), ctx.twist(c)
        triples = iter([tuple(_lift(ctx, m) for m in (u, b, c))])
    else:
        triples = _semisimple_triple_candidates(ctx, cid)

    for x, y, z in islice(triples, ctx.settings.RETRY_BUDGET):
        if _generates(ctx, x, y):
            logger.info(f"Generating triple in {cid} for PSL2({ctx.q}) found")
            return _certificate(ctx, (x, y, z), "triple-product-1")

    seed = ctx.settings.DEFAULT_SEED if seed is None else seed
    triple = _random_triple(ctx, cid, seed)
    if triple is not None:
        return _certificate(ctx, triple, "triple-product-1")

    logger.error(f"No generating triple found in {cid} for PSL2({ctx.q})")
    raise ConstructionDefect(
        "no generating triple found",
        {"q": ctx.q, "class": cid.label},
    )


# Products of conjugate generators

def _factor_traces(ctx: GroupCtx) -> List[int]:
    """Factor traces: T_q((q+1)/d) first, then every other semisimple orbit of order > 2."""
    preferred = [
        t for t in sorted(trace_set(ctx, (ctx.q + 1) // ctx.d))
        if t == ctx.trace_orbit(t)
    ]
    rest = [
        t for t in ctx.field.elements
        if t == ctx.trace_orbit(t) and t not in preferred and t != 0
        and ctx.trace_type(t) != ElementKind.UNIPOTENT
    ]
    return [t for t in preferred if t != 0] + rest


def _conjugated_onto(ctx: GroupCtx, a: Mat2, b: Mat2, z: PElem) -> Optional[Pair]:
    """Conjugate the pair so that its product is z, twisting first if the classes require it."""
    options = [(a, b)]
    if ctx.odd:
        options.append((ctx.twist(a), ctx.twist(b)))
    for a_, b_ in options:
        g = ctx.conjugator(ctx.mat_mul(a_, b_), z.rep)
        if g is None:
            continue
        g_inv = ctx.mat_inv(g)
        x = _lift(ctx, ctx.mat_mul(ctx.mat_mul(g, a_), g_inv))
        y = _lift(ctx, ctx.mat_mul(ctx.mat_mul(g, b_), g_inv))
        return x, y
    return None


def _semisimple_factor_candidates(ctx: GroupCtx, z: PElem) -> Iterator[Pair]:
    f = ctx.field
    gamma = ctx.trace(z.rep)
    for alpha in _factor_traces(ctx):
        for g in sorted({gamma, f.neg(gamma)}):
            if is_singular(f, alpha, alpha, g):
                continue
            triple = _first_realization(ctx, alpha, alpha, g)
            if triple is None:
                continue
            pair = _conjugated_onto(ctx, triple[0], triple[1], z)
            if pair is not None:
                yield pair
                break


def _unipotent_factor_candidates(ctx: GroupCtx, z: PElem) -> Iterator[Pair]:
    f = ctx.field
    if ctx.elem_type(z) == ElementKind.UNIPOTENT and f.e == 1:
        # u * b = c^-1 is unipotent
        u, b, _ = _unipotent_triple(ctx)
        pair = _conjugated_onto(ctx, u, b, z)
        if pair is not None:
            yield pair

    gamma = ctx.trace(z.rep)
    for g in sorted({gamma, f.neg(gamma)}):
        # tr(U * M U M^-1) = 2 - c^2, so 2 - g must be a square
        if is_singular(f, ctx.two, ctx.two, g) or not f.is_square(f.sub(ctx.two, g)):
            continue
        for a, b, _ in islice(iter_trace_triples(ctx, ctx.two, ctx.two, g), ctx.settings.RETRY_BUDGET):
            if ctx.class_id(_lift(ctx, a)) != ctx.class_id(_lift(ctx, b)):
                continue
            pair = _conjugated_onto(ctx, a, b, z)
            if pair is not None:
                yield pair


def product_of_conjugate_generators(
    ctx: GroupCtx,
    z: PElem,
    unipotent_factors: bool = False,
) -> Optional[GenCertificate]:
    """
    Write z = xy with x, y conjugate and <x, y> = PSL2(q).

    Semisimple factors are tried first; for q in UNIPOTENT_FALLBACK_Q the
    search continues with unipotent factors.

    Args:
        ctx: The group
        z: A non-identity element
        unipotent_factors: Require x and y unipotent

    Returns:
        A "product" certificate, or None when no such factorization exists
    """
    if factorization_absence_reason(ctx, z, unipotent_factors) is not None:
        return None

    if unipotent_factors:
        candidates = _unipotent_factor_candidates(ctx, z)
    elif ctx.q in UNIPOTENT_FALLBACK_Q:
        candidates = chain(_semisimple_factor_candidates(ctx, z), _unipotent_factor_candidates(ctx, z))
    else:
        candidates = _semisimple_factor_candidates(ctx, z)
    pair = _first_generating(ctx, candidates, ctx.settings.RETRY_BUDGET)
    if pair is None:
        logger.error(f"No factorization of {z.as_list()} found in PSL2({ctx.q})")
        raise ConstructionDefect(
            "no factorization into conjugate generators found",
            {"q": ctx.q, "element": z.as_list(), "unipotent_factors": unipotent_factors},
        )
    return _certificate(ctx, pair, "product", target=z)
