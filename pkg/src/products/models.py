"""
Product and Generation Data Models

Symbolic class-square descriptions, subgroup classifications and generation
certificates.

Design Considerations:
- Certificates carry matrices as enc-encoded 4-lists so they serialize as-is
- Every certificate records the closure order that was actually enumerated
- Subgroup kinds keep the element-order census that decided them
"""

from enum import Enum
from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, Field


class SetDescr(str, Enum):
    """Closed forms for class squares, as unions of classes."""
    WHOLE_GROUP = "WholeGroup"
    ALL_MINUS_UNIPOTENTS = "AllMinusUnipotents"
    UNIPOTENTS_PLUS_GOOD_SS = "UnipotentsPlusGoodSS"
    UNIPOTENTS_PLUS_GOOD_SS_PLUS_IDENTITY = "UnipotentsPlusGoodSSPlusIdentity"


class SubgroupTag(str, Enum):
    STRUCTURAL = "Structural"
    SMALL = "Small"
    SUBFIELD_PSL = "SubfieldPSL"
    SUBFIELD_PGL = "SubfieldPGL"
    FULL = "Full"


class SubgroupKind(BaseModel):
    """
    Classification of a two-generator subgroup of PSL2(q).

    Structural subgroups fix a point of the projective line over F_{q^2};
    small subgroups are dihedral, A4, S4 or A5; subfield subgroups are copies
    of PSL2(q1) or PGL2(q1) for a proper subfield F_{q1}.
    """
    tag: SubgroupTag = Field(..., description="Subgroup family")
    order: int = Field(..., ge=1, description="Order of the generated subgroup")
    q1: Optional[int] = Field(default=None, description="Subfield size for subfield kinds")
    shape: Optional[str] = Field(
        default=None,
        description="Isomorphism type for small subgroups: dihedral, A4, S4 or A5"
    )
    order_census: Optional[Dict[int, int]] = Field(
        default=None,
        description="Number of elements of each order, when it was computed"
    )


class GenCertificate(BaseModel):
    """
    Conjugate elements generating PSL2(q).

    relation is "pair" for two generators from one class,
    "triple-product-1" for x, y, z from one class with xyz = 1 and <x, y> = G,
    and "product" for two conjugate generators whose product is `target`.
    """
    q: int = Field(..., description="Field size")
    class_label: str = Field(..., description="Selector label of the class of the generators")
    elements: List[List[int]] = Field(
        ...,
        min_length=2,
        max_length=3,
        description="Canonical lifts [a, b, c, d] of the certificate elements"
    )
    relation: Literal["pair", "triple-product-1", "product"] = Field(
        ...,
        description="Relation the elements satisfy"
    )
    closure_order: int = Field(..., description="Order of the subgroup generated by the first two elements")
    target: Optional[List[int]] = Field(
        default=None,
        description="Canonical lift of the factored element for product certificates"
    )
