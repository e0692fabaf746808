"""
Trace Triple Realization

Constructs A, B, C in SL2(q) with prescribed traces alpha, beta, gamma and
ABC = I, and tests trace triples for singularity.

Design Considerations:
- A is fixed to the companion matrix [[alpha, -1], [1, 0]] and
  B = [[u, v], [w, beta - u]]; tr(AB) = gamma and det B = 1 reduce to the
  monic quadratic w^2 + (gamma - alpha*u)w + (1 - u(beta - u)) = 0
- u runs in enc order and roots in enc order, so results are deterministic
- Degenerate triples with alpha = +-2 or beta = +-2 fall back to a scalar factor;
  tiny fields fall back to an exhaustive scan
- Every returned triple is checked against the trace and product contract
"""

import logging
from typing import Iterator, Tuple

from src.fields.finite_field import FiniteField
from src.groups.models import Mat2
from src.groups.psl2 import GroupCtx
from src.utils.errors import ConstructionDefect

logger = logging.getLogger(__name__)

Triple = Tuple[Mat2, Mat2, Mat2]

EXHAUSTIVE_REALIZATION_QMAX = 9


def is_singular(field: FiniteField, alpha: int, beta: int, gamma: int) -> bool:
    """alpha^2 + beta^2 + gamma^2 - alpha*beta*gamma - 4 == 0."""
    f = field
    total = f.add(f.add(f.mul(alpha, alpha), f.mul(beta, beta)), f.mul(gamma, gamma))
    total = f.sub(total, f.mul(f.mul(alpha, beta), gamma))
    return f.sub(total, f.from_int(4)) == 0


def _companion(ctx: GroupCtx, alpha: int) -> Mat2:
    return Mat2(alpha, ctx.field.neg(1), 1, 0)


def _sweep(ctx: GroupCtx, alpha: int, beta: int, gamma: int) -> Iterator[Triple]:
    f = ctx.field
    a = _companion(ctx, alpha)
    for u in f.elements:
        s = f.sub(gamma, f.mul(alpha, u))
        c0 = f.sub(1, f.mul(u, f.sub(beta, u)))
        for w in f.solve_monic_quadratic(s, c0):
            b = Mat2(u, f.add(w, s), w, f.sub(beta, u))
            yield a, b, ctx.mat_inv(ctx.mat_mul(a, b))


def _scalar_solutions(ctx: GroupCtx, alpha: int, beta: int, gamma: int) -> Iterator[Triple]:
    f = ctx.field
    for sign in ((1, f.neg(1)) if ctx.odd else (1,)):
        scalar = Mat2(sign, 0, 0, sign)
        twice = f.add(sign, sign)
        # A = sI forces tr(C) = s*beta
        if alpha == twice and gamma == f.mul(sign, beta):
            b = _companion(ctx, beta)
            yield scalar, b, ctx.mat_inv(ctx.mat_mul(scalar, b))
        # B = sI forces tr(C) = s*alpha
        if beta == twice and gamma == f.mul(sign, alpha):
            a = _companion(ctx, alpha)
            yield a, scalar, ctx.mat_inv(ctx.mat_mul(a, scalar))


def _exhaustive(ctx: GroupCtx, alpha: int, beta: int, gamma: int) -> Iterator[Triple]:
    f = ctx.field
    firsts = [_companion(ctx, alpha)]
    if alpha in (ctx.two, ctx.minus_two):
        sign = 1 if alpha == ctx.two else f.neg(1)
        firsts.append(Mat2(sign, 0, 0, sign))
    for a in firsts:
        for u in f.elements:
            for v in f.elements:
                for w in f.elements:
                    b = Mat2(u, v, w, f.sub(beta, u))
                    if ctx.det(b) != 1:
                        continue
                    ab = ctx.mat_mul(a, b)
                    if ctx.trace(ab) == gamma:
                        yield a, b, ctx.mat_inv(ab)


def iter_trace_triples(ctx: GroupCtx, alpha: int, beta: int, gamma: int) -> Iterator[Triple]:
    """
    Every realization the sweep finds, in deterministic order.

    With A fixed to the companion matrix the sweep meets every B, so the
    stream enumerates all solutions up to simultaneous conjugation. Scalar
    solutions follow; the exhaustive scan only runs when nothing was found.
    """
    for value in (alpha, beta, gamma):
        ctx.field.check(value)

    found = False
    for triple in _sweep(ctx, alpha, beta, gamma):
        found = True
        yield triple
    for triple in _scalar_solutions(ctx, alpha, beta, gamma):
        found = True
        yield triple
    if not found and ctx.q <= EXHAUSTIVE_REALIZATION_QMAX:
        logger.warning(f"Sweep found no realization of ({alpha}, {beta}, {gamma}) over F_{ctx.q}; scanning exhaustively")
        yield from _exhaustive(ctx, alpha, beta, gamma)


def check_triple(ctx: GroupCtx, triple: Triple, alpha: int, beta: int, gamma: int) -> None:
    """Raise ConstructionDefect unless the triple has the traces and ABC = I."""
    a, b, c = triple
    traces_ok = (ctx.trace(a), ctx.trace(b), ctx.trace(c)) == (alpha, beta, gamma)
    dets_ok = all(ctx.det(m) == 1 for m in triple)
    product_ok = ctx.mat_mul(ctx.mat_mul(a, b), c) == Mat2(1, 0, 0, 1)
    if not (traces_ok and dets_ok and product_ok):
        logger.error(f"Realization of ({alpha}, {beta}, {gamma}) over F_{ctx.q} violates its contract")
        raise ConstructionDefect(
            "trace triple realization violates its contract",
            {"q": ctx.q, "traces": [alpha, beta, gamma], "triple": [list(m) for m in triple]},
        )


def realize_trace_triple(ctx: GroupCtx, alpha: int, beta: int, gamma: int) -> Triple:
    """
    Matrices A, B, C in SL2(q) with traces alpha, beta, gamma and ABC = I.

    Raises:
        ConstructionDefect: If no realization is found
    """
    for triple in iter_trace_triples(ctx, alpha, beta, gamma):
        check_triple(ctx, triple, alpha, beta, gamma)
        return triple
    logger.error(f"No realization of ({alpha}, {beta}, {gamma}) over F_{ctx.q}")
    raise ConstructionDefect(
        "no realization of the trace triple",
        {"q": ctx.q, "traces": [alpha, beta, gamma]},
    )
