"""
Per-q Verification

Runs every closed-form claim for one q against the brute-force oracle and
collects the outcome in a VerifyReport.

Design Considerations:
- Checks run sequentially in a fixed order, and random choices come from a
  single seeded generator, so equal inputs give identical reports
- A construction defect or a disagreement with the oracle is recorded as a
  mismatch, so one failing class never hides the rest of the report
- Brute-force generation and conjugacy checks respect their configured limits
"""

import logging
import random
from typing import Callable, FrozenSet, Iterable, List, Optional

from src.classification.counts import (
    element_counts,
    element_counts_from_classes,
    trace_counts,
    trace_counts_formula,
)
from src.classification.models import TraceQuality
from src.classification.orders import is_q_good, orders_table
from src.classification.traces import trace_kind, trace_set
from src.config.reference_data import REFERENCE_ORDERS_TABLE
from src.config.settings import PSL2Settings, get_settings
from src.groups.models import ClassId, ElementKind, PElem
from src.groups.psl2 import GroupCtx, group_for_order
from src.products.generation import (
    factorization_absence_reason,
    generating_pair_in_class,
    generating_triple_in_class,
    pair_absence_reason,
    product_of_conjugate_generators,
    triple_absence_reason,
)
from src.products.models import GenCertificate
from src.products.squares import class_square_closed, expand_set_descr, total_size
from src.utils.errors import ConstructionDefect

from .enumeration import (
    GroupTable,
    class_square_brute,
    closure,
    conjugacy_classes_brute,
    element_counts_brute,
    enumerate_group,
    factorization_brute,
    generating_pair_brute,
    generating_triple_brute,
    square_witness,
    trace_sets_brute,
    unipotent_orbits_brute,
)
from .models import (
    ClassSquareCheck,
    ConjugacyCheck,
    CountsCheck,
    EpsilonCheck,
    GenerationCheck,
    Mismatch,
    SquareTotalCheck,
    TraceSetCheck,
    VerifyReport,
)

logger = logging.getLogger(__name__)

EPSILON_WHEN_1_MOD_4 = "subtract 1 when q ≡ 1 mod 4"
EPSILON_WHEN_3_MOD_4 = "subtract 1 when q ≡ 3 mod 4"

REPRESENTATIVE_SAMPLES = 3


def _labels(ids: Iterable[ClassId]) -> List[str]:
    return [cid.label for cid in sorted(ids, key=ClassId.sort_key)]


# Individual checks

def check_table1(ctx: GroupCtx, mismatches: List[Mismatch]) -> Optional[bool]:
    reference = REFERENCE_ORDERS_TABLE.get(ctx.q)
    if reference is None:
        return None
    row = orders_table(ctx.q)
    computed = (row.unipotent_order, row.minimal_good, row.minimal_not_good)
    expected = (reference["unipotent"], reference["good"], reference["not_good"])
    if computed != expected:
        mismatches.append(Mismatch(
            check="table1",
            detail=f"computed row {computed} differs from reference row {expected}",
        ))
        return False
    return True


def check_counts(ctx: GroupCtx, table: GroupTable, mismatches: List[Mismatch]) -> CountsCheck:
    traces = trace_counts(ctx)
    traces_formula = trace_counts_formula(ctx.q)
    elements = element_counts(ctx)
    elements_brute = element_counts_brute(table)
    elements_classes = element_counts_from_classes(ctx)

    if traces != traces_formula:
        mismatches.append(Mismatch(
            check="trace_counts",
            detail=f"direct {traces.model_dump()} vs formula {traces_formula.model_dump()}",
        ))
    if not (elements == elements_brute == elements_classes):
        mismatches.append(Mismatch(
            check="element_counts",
            detail=f"formula {elements.model_dump()} vs enumerated {elements_brute.model_dump()}",
        ))

    good_orders_match = True
    if ctx.odd:
        for cid, _ in ctx.all_class_ids():
            if not cid.is_semisimple:
                continue
            good_trace = trace_kind(ctx, cid.trace_orbit).quality == TraceQuality.GOOD
            order = ctx.class_order(cid)
            good_order = is_q_good(ctx.q, order)
            if good_trace != good_order:
                good_orders_match = False
                mismatches.append(Mismatch(
                    check="good_orders",
                    class_label=cid.label,
                    detail=f"order {order} q-good={good_order} but trace good={good_trace}",
                    witness=[ctx.representative(cid).as_list()],
                ))

    return CountsCheck(
        trace_counts=traces,
        trace_counts_formula=traces_formula,
        element_counts=elements,
        element_counts_brute=elements_brute,
        good_orders_match=good_orders_match,
        match=traces == traces_formula and elements == elements_brute == elements_classes and good_orders_match,
    )


def check_trace_sets(ctx: GroupCtx, table: GroupTable, mismatches: List[Mismatch]) -> List[TraceSetCheck]:
    brute = trace_sets_brute(table)
    checks = []
    for n in range(2, ctx.q + 2):
        closed = trace_set(ctx, n)
        collected = brute.get(n, frozenset())
        if not closed and not collected:
            continue
        match = closed == collected
        checks.append(TraceSetCheck(n=n, closed=sorted(closed), brute=sorted(collected), match=match))
        if not match:
            mismatches.append(Mismatch(
                check="trace_set",
                detail=f"T({n}) = {sorted(closed)} but the group shows {sorted(collected)}",
            ))
    return checks


def check_conjugacy(ctx: GroupCtx, table: GroupTable, mismatches: List[Mismatch]) -> ConjugacyCheck:
    orbits = conjugacy_classes_brute(table)
    blocks = {frozenset(members) for members in table.class_partition.values()}
    classes_match = set(orbits) == blocks
    if not classes_match:
        stray = next(orbit for orbit in orbits if orbit not in blocks)
        mismatches.append(Mismatch(
            check="conjugacy_classes",
            class_label=table.class_of(min(stray)).label,
            detail="an orbit of conjugation is not a block of the class_id partition",
            witness=[table.elements[i].as_list() for i in sorted(stray)[:2]],
        ))

    unipotent = unipotent_orbits_brute(ctx)
    labels = []
    labels_match = len(unipotent) == (2 if ctx.odd else 1)
    for orbit in unipotent:
        seen = {ctx.class_id(ctx.canon(m)) for m in orbit}
        labels.append(seen)
        if len(seen) != 1:
            labels_match = False
    if labels_match and ctx.odd:
        labels_match = labels[0] != labels[1]
    if not labels_match:
        mismatches.append(Mismatch(
            check="unipotent_classes",
            detail=f"{len(unipotent)} trace-2 orbits carry labels {[_labels(s) for s in labels]}",
        ))

    return ConjugacyCheck(
        classes_match=classes_match,
        unipotent_orbits=len(unipotent),
        unipotent_labels_match=labels_match,
    )


def check_class_squares(
    ctx: GroupCtx,
    table: GroupTable,
    rng: random.Random,
    mismatches: List[Mismatch],
) -> List[ClassSquareCheck]:
    checks = []
    for cid, _ in ctx.all_class_ids():
        if cid.is_identity:
            continue
        descr = class_square_closed(ctx, cid)
        closed = expand_set_descr(ctx, descr)
        brute = class_square_brute(table, cid)

        members = table.members(cid)
        independent = all(
            class_square_brute(table, cid, table.elements[rng.choice(members)]) == brute
            for _ in range(REPRESENTATIVE_SAMPLES)
        )
        missing, unexpected = closed - brute, brute - closed
        _record_square_mismatches(ctx, table, cid, missing, unexpected, mismatches)
        if not independent:
            mismatches.append(Mismatch(
                check="class_square",
                class_label=cid.label,
                detail="the classes reached depend on the fixed left factor",
            ))

        checks.append(ClassSquareCheck(
            class_label=cid.label,
            closed_form=descr.value,
            closed_classes=_labels(closed),
            brute_classes=_labels(brute),
            missing=_labels(missing),
            unexpected=_labels(unexpected),
            element_total=total_size(ctx, brute),
            representative_independent=independent,
            match=not missing and not unexpected and independent,
        ))
    return checks


def _record_square_mismatches(
    ctx: GroupCtx,
    table: GroupTable,
    cid: ClassId,
    missing: FrozenSet[ClassId],
    unexpected: FrozenSet[ClassId],
    mismatches: List[Mismatch],
) -> None:
    for target in sorted(unexpected, key=ClassId.sort_key):
        witness = square_witness(table, cid, target)
        mismatches.append(Mismatch(
            check="class_square",
            class_label=cid.label,
            detail=f"{target.label} is reached by C^2 but not named by the closed form",
            witness=[x.as_list() for x in witness] if witness else [],
        ))
    for target in sorted(missing, key=ClassId.sort_key):
        mismatches.append(Mismatch(
            check="class_square",
            class_label=cid.label,
            detail=f"{target.label} is named by the closed form but no product reaches it",
            witness=[ctx.representative(target).as_list()],
        ))


def check_epsilon(ctx: GroupCtx, squares: List[ClassSquareCheck], mismatches: List[Mismatch]) -> EpsilonCheck:
    """Arbitrate the correction term of the unipotent |C^2| for odd q."""
    q = ctx.q
    observed = next(c.element_total for c in squares if c.class_label.startswith("unip"))
    base = 3 * q * (q * q - 1) // 8
    candidates = {
        EPSILON_WHEN_1_MOD_4: base - (1 if q % 4 == 1 else 0),
        EPSILON_WHEN_3_MOD_4: base - (1 if q % 4 == 3 else 0),
    }
    supported = [name for name, total in candidates.items() if total == observed]
    check = EpsilonCheck(
        observed_total=observed,
        candidates=candidates,
        epsilon_observed=supported[0] if len(supported) == 1 else None,
    )
    if check.epsilon_observed is None:
        mismatches.append(Mismatch(
            check="epsilon",
            class_label="unip",
            detail=f"|C^2| = {observed} matches no candidate in {candidates}",
        ))
    return check


def expected_square_total(ctx: GroupCtx, cid: ClassId) -> Optional[int]:
    """Exact |C^2| from q alone, or None for the odd-q unipotent classes."""
    q = ctx.q
    if not ctx.odd:
        if cid.kind == ElementKind.NONSPLIT:
            return (q - 1) * (q * q - 1)
        return q * (q * q - 1)
    if cid.is_unipotent:
        return None
    if ctx.class_order(cid) == 2 and q % 4 == 3:
        return (q - 2) * (q * q - 1) // 2
    return q * (q * q - 1) // 2


def check_square_totals(
    ctx: GroupCtx,
    squares: List[ClassSquareCheck],
    mismatches: List[Mismatch],
) -> List[SquareTotalCheck]:
    checks = []
    for square in squares:
        cid = _class_for_label(ctx, square.class_label)
        expected = expected_square_total(ctx, cid)
        if expected is None:
            continue
        check = SquareTotalCheck(
            class_label=square.class_label,
            expected=expected,
            observed=square.element_total,
            match=expected == square.element_total,
        )
        if not check.match:
            mismatches.append(Mismatch(
                check="square_total",
                class_label=square.class_label,
                detail=f"|C^2| = {square.element_total}, expected {expected}",
            ))
        checks.append(check)
    return checks


def _class_for_label(ctx: GroupCtx, label: str) -> ClassId:
    return next(cid for cid, _ in ctx.all_class_ids() if cid.label == label)


def _generated_by_oracle(table: GroupTable, cert: Optional[GenCertificate]) -> bool:
    if cert is None:
        return False
    ctx = table.ctx
    x, y = (ctx.elem(*entries) for entries in cert.elements[:2])
    return len(closure(table, x, y)) == len(table)


def _construct(
    build: Callable[[], Optional[GenCertificate]],
    what: str,
    cid: ClassId,
    witness: PElem,
    mismatches: List[Mismatch],
) -> Optional[GenCertificate]:
    """Run one construction, recording a defect as a mismatch instead of raising."""
    try:
        return build()
    except ConstructionDefect as exc:
        logger.warning(f"{what} construction failed for {cid}: {exc.message}")
        mismatches.append(Mismatch(
            check="generation_defect",
            class_label=cid.label,
            detail=f"{what}: {exc.message}",
            witness=[witness.as_list()],
        ))
        return None


def check_generation(
    ctx: GroupCtx,
    table: GroupTable,
    seed: int,
    mismatches: List[Mismatch],
) -> List[GenerationCheck]:
    brute = len(table) <= ctx.settings.BRUTE_GENERATION_LIMIT
    if not brute:
        logger.info(f"PSL2({ctx.q}) is over the brute-force generation limit; relying on certificates")

    checks = []
    for cid, _ in ctx.all_class_ids():
        if cid.is_identity:
            continue
        z = ctx.representative(cid)
        pair_reason = pair_absence_reason(ctx, cid)
        triple_reason = triple_absence_reason(ctx, cid)
        factor_reason = factorization_absence_reason(ctx, z)
        unip_reason = factorization_absence_reason(ctx, z, unipotent_factors=True)

        pair = _construct(lambda: generating_pair_in_class(ctx, cid, seed), "pair", cid, z, mismatches)
        triple = _construct(lambda: generating_triple_in_class(ctx, cid, seed), "triple", cid, z, mismatches)
        factor = _construct(lambda: product_of_conjugate_generators(ctx, z), "factorization", cid, z, mismatches)
        unip_factor = _construct(
            lambda: product_of_conjugate_generators(ctx, z, unipotent_factors=True),
            "unipotent factorization", cid, z, mismatches,
        )

        pair_found = _generated_by_oracle(table, pair)
        triple_found = _generated_by_oracle(table, triple)
        factor_found = _generated_by_oracle(table, factor)
        unip_found = _generated_by_oracle(table, unip_factor)

        pair_brute = triple_brute = factor_brute = unip_brute = None
        if brute:
            pair_brute = generating_pair_brute(table, cid) is not None
            triple_brute = generating_triple_brute(table, cid) is not None
            factor_brute = factorization_brute(table, z) is not None
            unip_brute = factorization_brute(table, z, unipotent_factors=True) is not None

        expectations = [
            (pair_reason is None, pair_found, pair_brute),
            (triple_reason is None, triple_found, triple_brute),
            (factor_reason is None, factor_found, factor_brute),
            (unip_reason is None, unip_found, unip_brute),
        ]
        check = GenerationCheck(
            class_label=cid.label,
            pair_expected=pair_reason is None,
            pair_found=pair_found,
            pair_brute=pair_brute,
            pair_reason=pair_reason,
            triple_expected=triple_reason is None,
            triple_found=triple_found,
            triple_brute=triple_brute,
            triple_reason=triple_reason,
            factorization_expected=factor_reason is None,
            factorization_found=factor_found,
            factorization_brute=factor_brute,
            factorization_reason=factor_reason,
            unipotent_factorization_expected=unip_reason is None,
            unipotent_factorization_found=unip_found,
            unipotent_factorization_brute=unip_brute,
            unipotent_factorization_reason=unip_reason,
            match=all(found == expected and exhaustive in (None, expected)
                      for expected, found, exhaustive in expectations),
        )
        if not check.match:
            mismatches.append(Mismatch(
                check="generation",
                class_label=cid.label,
                detail=(
                    f"pair expected={check.pair_expected} found={pair_found} brute={pair_brute}; "
                    f"triple expected={check.triple_expected} found={triple_found} brute={triple_brute}; "
                    f"factorization expected={check.factorization_expected} found={factor_found} "
                    f"brute={factor_brute}; unipotent factorization "
                    f"expected={check.unipotent_factorization_expected} found={unip_found} brute={unip_brute}"
                ),
                witness=[z.as_list()],
            ))
        checks.append(check)
    return checks


# Driver

def verify_all(q: int, seed: Optional[int] = None, settings: Optional[PSL2Settings] = None) -> VerifyReport:
    """
    Reconcile every closed form for PSL2(q) with the brute-force oracle.

    Class-square, epsilon and generation checks need q > 3 and are left
    empty below that.

    Raises:
        FieldError: If q is not a supported prime power
        BudgetExceededError: If PSL2(q) is too large to enumerate
    """
    settings = settings or get_settings()
    seed = settings.DEFAULT_SEED if seed is None else seed
    ctx = group_for_order(q, settings)
    logger.info(f"Verifying PSL2({q}) with seed {seed}")

    table = enumerate_group(ctx)
    rng = random.Random(seed)
    mismatches: List[Mismatch] = []

    table1_match = check_table1(ctx, mismatches)
    counts = check_counts(ctx, table, mismatches)
    trace_sets = check_trace_sets(ctx, table, mismatches)
    conjugacy = None
    if q <= settings.CONJUGACY_CHECK_QMAX:
        conjugacy = check_conjugacy(ctx, table, mismatches)

    squares: List[ClassSquareCheck] = []
    square_totals: List[SquareTotalCheck] = []
    generation: List[GenerationCheck] = []
    epsilon = None
    nonsplit_match = None
    if q > 3:
        squares = check_class_squares(ctx, table, rng, mismatches)
        square_totals = check_square_totals(ctx, squares, mismatches)
        if ctx.odd:
            epsilon = check_epsilon(ctx, squares, mismatches)
        else:
            nonsplit_match = all(
                t.match for t in square_totals
                if _class_for_label(ctx, t.class_label).kind == ElementKind.NONSPLIT
            )
        generation = check_generation(ctx, table, seed, mismatches)

    report = VerifyReport(
        q=q,
        p=ctx.p,
        e=ctx.field.e,
        defining_poly=list(ctx.field.defining_poly),
        seed=seed,
        group_order=ctx.group_order,
        class_count=len(table.class_partition),
        table1_match=table1_match,
        class_squares=squares,
        nonsplit_square_total_match=nonsplit_match,
        square_totals=square_totals,
        epsilon=epsilon,
        epsilon_observed=epsilon.epsilon_observed if epsilon else None,
        counts=counts,
        trace_sets=trace_sets,
        generation=generation,
        conjugacy=conjugacy,
        mismatches=mismatches,
        all_match=not mismatches,
    )
    if mismatches:
        logger.warning(f"PSL2({q}): {len(mismatches)} mismatches")
    else:
        logger.info(f"PSL2({q}): every check matches")
    return report
