"""
Classification Data Models

Result models for trace classification, counting formulas and the table of
q-minimal element orders.

Design Considerations:
- Field validation with explicit descriptions
- Counts are exact integers; optional fields are None where undefined
- Models serialize directly into the command-line JSON output
"""

from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class StructuralType(str, Enum):
    UNIPOTENT = "unipotent"
    SPLIT = "split"
    NONSPLIT = "nonsplit"


class TraceQuality(str, Enum):
    GOOD = "good"
    BAD = "bad"
    NOT_APPLICABLE = "not-applicable"


class TraceKind(BaseModel):
    """
    Classification of a trace alpha.

    Quality is only defined for odd q and alpha != +-2: alpha is good when
    one of 2 + alpha, 2 - alpha is a square.
    """
    model_config = ConfigDict(frozen=True)

    structural: StructuralType = Field(
        ...,
        description="Type of the non-identity elements with a lift of this trace"
    )
    quality: TraceQuality = Field(
        default=TraceQuality.NOT_APPLICABLE,
        description="Good/bad tag for semisimple traces of odd q"
    )


class OrdersRow(BaseModel):
    """One row of the table of element orders of PSL2(q)."""
    q: int = Field(..., ge=2, description="Field size")
    unipotent_order: int = Field(..., description="Order p of the unipotent elements")
    minimal_good: List[int] = Field(
        default_factory=list,
        description="q-minimal semisimple orders that are q-good, ascending"
    )
    minimal_not_good: List[int] = Field(
        default_factory=list,
        description="q-minimal semisimple orders that are not q-good, ascending"
    )

    @model_validator(mode="after")
    def check_disjoint(self) -> "OrdersRow":
        if set(self.minimal_good) & set(self.minimal_not_good):
            raise ValueError("an order cannot be both q-good and not q-good")
        return self


class TraceCounts(BaseModel):
    """Number of traces alpha in F_q of each type."""
    unipotent: int = Field(..., ge=0)
    split: int = Field(..., ge=0)
    nonsplit: int = Field(..., ge=0)
    bad: Optional[int] = Field(
        default=None,
        description="Number of bad traces; None for even q"
    )


class ElementCounts(BaseModel):
    """Number of non-identity elements of each type."""
    unipotent: int = Field(..., ge=0)
    split_ss: int = Field(..., ge=0)
    nonsplit_ss: int = Field(..., ge=0)
    non_q_good_ss: Optional[int] = Field(
        default=None,
        description="Semisimple elements whose order is not q-good; None for even q"
    )
