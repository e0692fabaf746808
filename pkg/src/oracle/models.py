"""
Verification Report Models

Pydantic models for the per-q reconciliation of closed forms against the
brute-force oracle.

Design Considerations:
- Reports contain no timestamps or floats so equal runs serialize to
  identical bytes
- Every list is emitted in a fixed order: classes in listing order, orders
  ascending, field elements by enc
- A failed check always carries the class and elements that witness it
"""

from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from src.classification.models import ElementCounts, TraceCounts


class Mismatch(BaseModel):
    """One disagreement between a closed form and the oracle."""
    check: str = Field(..., description="Name of the failed check")
    class_label: Optional[str] = Field(default=None, description="Class the disagreement concerns")
    detail: str = Field(..., description="What disagreed")
    witness: List[List[int]] = Field(
        default_factory=list,
        description="Elements exhibiting the disagreement, as [a, b, c, d]"
    )


class ClassSquareCheck(BaseModel):
    """Closed-form and brute-force C^2 for one class."""
    class_label: str
    closed_form: str = Field(..., description="Symbolic class union given by the closed form")
    closed_classes: List[str] = Field(default_factory=list)
    brute_classes: List[str] = Field(default_factory=list)
    missing: List[str] = Field(
        default_factory=list,
        description="Classes the closed form names but no product reaches"
    )
    unexpected: List[str] = Field(
        default_factory=list,
        description="Classes reached by a product but absent from the closed form"
    )
    element_total: int = Field(..., description="|C^2| from the brute-force class list")
    representative_independent: bool = Field(
        default=True,
        description="Other choices of the fixed left factor gave the same classes"
    )
    match: bool


class CountsCheck(BaseModel):
    """Counting formulas against direct classification and the enumerated group."""
    trace_counts: TraceCounts
    trace_counts_formula: TraceCounts
    element_counts: ElementCounts
    element_counts_brute: ElementCounts
    good_orders_match: bool = Field(
        ...,
        description="q-good orders coincide with good traces on every semisimple class"
    )
    match: bool


class TraceSetCheck(BaseModel):
    """T_q(n) from roots of unity against traces collected from the group."""
    n: int
    closed: List[int] = Field(default_factory=list)
    brute: List[int] = Field(default_factory=list)
    match: bool


class GenerationCheck(BaseModel):
    """Presence of generating pairs, triples and factorizations for one class."""
    class_label: str
    pair_expected: bool
    pair_found: bool
    pair_brute: Optional[bool] = Field(
        default=None,
        description="Exhaustive search result; None when the group is over the brute-force limit"
    )
    pair_reason: Optional[str] = Field(default=None, description="Why no pair exists")
    triple_expected: bool
    triple_found: bool
    triple_brute: Optional[bool] = None
    triple_reason: Optional[str] = Field(default=None, description="Why no triple exists")
    factorization_expected: bool
    factorization_found: bool = Field(
        ...,
        description="The class representative is a product of two conjugate generators"
    )
    factorization_brute: Optional[bool] = None
    factorization_reason: Optional[str] = None
    unipotent_factorization_expected: bool = Field(
        ...,
        description="The representative is a product of two conjugate unipotent generators"
    )
    unipotent_factorization_found: bool
    unipotent_factorization_brute: Optional[bool] = None
    unipotent_factorization_reason: Optional[str] = None
    match: bool


class SquareTotalCheck(BaseModel):
    """Exact |C^2| for a class whose square has a closed-form size."""
    class_label: str
    expected: int
    observed: int
    match: bool


class EpsilonCheck(BaseModel):
    """Which correction turns 3q(q^2 - 1)/8 into the unipotent |C^2| for odd q."""
    observed_total: int
    candidates: Dict[str, int] = Field(
        ...,
        description="Predicted total under each candidate convention"
    )
    epsilon_observed: Optional[str] = Field(
        default=None,
        description="The convention the data supports, None if neither does"
    )


class ConjugacyCheck(BaseModel):
    """class_id against conjugacy computed from orbits."""
    classes_match: bool = Field(..., description="Orbit partition equals the class_id partition")
    unipotent_orbits: int = Field(..., description="Number of SL2 orbits of trace-2 matrices")
    unipotent_labels_match: bool


class VerifyReport(BaseModel):
    """Reconciliation of every closed-form claim for one q."""
    q: int
    p: int
    e: int
    defining_poly: List[int]
    seed: int
    group_order: int
    class_count: int
    table1_match: Optional[bool] = Field(
        default=None,
        description="Orders row equals the reference row; None when q has no reference row"
    )
    class_squares: List[ClassSquareCheck] = Field(default_factory=list)
    nonsplit_square_total_match: Optional[bool] = Field(
        default=None,
        description="Even q: every non-split |C^2| equals (q - 1)(q^2 - 1)"
    )
    square_totals: List[SquareTotalCheck] = Field(
        default_factory=list,
        description="Exact |C^2| for every class except the odd-q unipotents, which the epsilon check covers"
    )
    epsilon: Optional[EpsilonCheck] = None
    epsilon_observed: Optional[str] = None
    counts: CountsCheck
    trace_sets: List[TraceSetCheck] = Field(default_factory=list)
    generation: List[GenerationCheck] = Field(default_factory=list)
    conjugacy: Optional[ConjugacyCheck] = Field(
        default=None,
        description="Exhaustive conjugacy cross-check, run up to CONJUGACY_CHECK_QMAX"
    )
    mismatches: List[Mismatch] = Field(default_factory=list)
    all_match: bool
