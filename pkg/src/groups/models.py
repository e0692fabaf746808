"""
Group Element Data Models

Value types for 2x2 matrices over F_q, elements of PSL2(q) and conjugacy
class labels.

Design Considerations:
- Matrix entries are field encodings, so matrices hash and compare as tuples
- All types are immutable and usable as dict keys
- Class labels render to the textual selectors used on the command line
"""

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional, Tuple


class ElementKind(str, Enum):
    """Structural type of an element, from the roots of its characteristic polynomial."""
    IDENTITY = "Identity"
    UNIPOTENT = "Unipotent"
    SPLIT = "SplitSS"
    NONSPLIT = "NonsplitSS"

    @property
    def is_semisimple(self) -> bool:
        return self in (ElementKind.SPLIT, ElementKind.NONSPLIT)


_KIND_RANK = {
    ElementKind.IDENTITY: 0,
    ElementKind.UNIPOTENT: 1,
    ElementKind.SPLIT: 2,
    ElementKind.NONSPLIT: 2,
}


class Mat2(NamedTuple):
    """Row-major 2x2 matrix [[a, b], [c, d]] of field encodings."""
    a: int
    b: int
    c: int
    d: int

    def as_list(self) -> list:
        return [self.a, self.b, self.c, self.d]


@dataclass(frozen=True, order=True)
class PElem:
    """
    Element of PSL2(q): the canonical lift of the coset {A, -A}.

    Attributes:
        rep: Canonical SL2 representative
        q: Size of the field the entries belong to
    """
    rep: Mat2
    q: int

    def as_list(self) -> list:
        return self.rep.as_list()


@dataclass(frozen=True)
class ClassId:
    """
    Conjugacy class label.

    Semisimple classes carry the trace orbit {alpha, -alpha} through its
    enc-smaller member. Unipotent classes of odd q carry whether they contain
    U1 (square) or U1' (non-square); for even q the flag is None.
    """
    kind: ElementKind
    trace_orbit: Optional[int] = None
    unip_square_class: Optional[bool] = None

    @property
    def is_identity(self) -> bool:
        return self.kind == ElementKind.IDENTITY

    @property
    def is_unipotent(self) -> bool:
        return self.kind == ElementKind.UNIPOTENT

    @property
    def is_semisimple(self) -> bool:
        return self.kind.is_semisimple

    @property
    def label(self) -> str:
        """Selector-style label, e.g. 'id', 'unip:sq', 'tr:3'."""
        if self.is_identity:
            return "id"
        if self.is_unipotent:
            if self.unip_square_class is None:
                return "unip"
            return "unip:sq" if self.unip_square_class else "unip:nonsq"
        return f"tr:{self.trace_orbit}"

    def sort_key(self) -> Tuple[int, int]:
        """Deterministic listing order: identity, unipotents (square first), semisimple by trace."""
        rank = _KIND_RANK[self.kind]
        if self.is_unipotent:
            return (rank, 0 if self.unip_square_class in (True, None) else 1)
        return (rank, self.trace_orbit if self.trace_orbit is not None else -1)

    def __str__(self) -> str:
        return f"{self.kind.value}[{self.label}]"
