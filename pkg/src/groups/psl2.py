"""
PSL2(q) Arithmetic and Conjugacy Classes

SL2(q) matrix arithmetic, canonical PSL2(q) representatives, element orders,
element typing, conjugacy-class identification and class sizes.

Design Considerations:
- Group elements are canonical lifts: for odd q the enc-lexicographically
  smaller of A and -A, for even q the matrix itself
- Unipotent classes of odd q are told apart by the square class of
  det[Nv | v] for the trace-2 lift I + N, an SL2-invariant of the class
- Semisimple classes are labelled by the trace orbit {alpha, -alpha}
- Closures run breadth-first over the right Cayley graph and respect the
  configured enumeration budget
"""

import logging
import random
from math import gcd
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from sympy import factorint

from src.config.settings import PSL2Settings, get_settings
from src.fields.finite_field import FieldCtx, field_for_order
from src.utils.errors import BudgetExceededError, GroupError

from .models import ClassId, ElementKind, Mat2, PElem

logger = logging.getLogger(__name__)


class GroupCtx:
    """
    The group PSL2(q) over a fixed field.

    Attributes:
        field: The field F_q
        q: Field size
        p: Characteristic
        d: gcd(2, q - 1)
        group_order: q(q^2 - 1)/d
    """

    def __init__(self, field: FieldCtx, settings: Optional[PSL2Settings] = None):
        self.field = field
        self.settings = settings or get_settings()
        self.q = field.q
        self.p = field.p
        self.d = gcd(2, self.q - 1)
        self.group_order = self.q * (self.q * self.q - 1) // self.d
        self.odd = self.p != 2

        self.two = field.from_int(2)
        self.minus_two = field.neg(self.two)
        self.identity = PElem(Mat2(1, 0, 0, 1), self.q)
        self._minus_identity = Mat2(field.neg(1), 0, 0, field.neg(1))

    def __repr__(self) -> str:
        return f"GroupCtx(q={self.q}, d={self.d}, group_order={self.group_order})"

    # Matrix arithmetic

    def det(self, m: Mat2) -> int:
        f = self.field
        return f.sub(f.mul(m.a, m.d), f.mul(m.b, m.c))

    def trace(self, m: Mat2) -> int:
        return self.field.add(m.a, m.d)

    def mat_mul(self, x: Mat2, y: Mat2) -> Mat2:
        mul, add = self.field.mul, self.field.add
        return Mat2(
            add(mul(x.a, y.a), mul(x.b, y.c)),
            add(mul(x.a, y.b), mul(x.b, y.d)),
            add(mul(x.c, y.a), mul(x.d, y.c)),
            add(mul(x.c, y.b), mul(x.d, y.d)),
        )

    def mat_inv(self, m: Mat2) -> Mat2:
        """Inverse of a determinant-1 matrix via the adjugate."""
        neg = self.field.neg
        return Mat2(m.d, neg(m.b), neg(m.c), m.a)

    def mat_neg(self, m: Mat2) -> Mat2:
        neg = self.field.neg
        return Mat2(neg(m.a), neg(m.b), neg(m.c), neg(m.d))

    def mat_pow(self, m: Mat2, n: int) -> Mat2:
        if n < 0:
            m, n = self.mat_inv(m), -n
        result, base = Mat2(1, 0, 0, 1), m
        while n:
            if n & 1:
                result = self.mat_mul(result, base)
            base = self.mat_mul(base, base)
            n >>= 1
        return result

    def matrix(self, a: int, b: int, c: int, d: int) -> Mat2:
        """Validated SL2(q) matrix."""
        for entry in (a, b, c, d):
            if not isinstance(entry, int) or not 0 <= entry < self.q:
                raise GroupError(
                    f"matrix entry {entry!r} is not an element of F_{self.q}",
                    {"entries": [a, b, c, d]},
                )
        m = Mat2(a, b, c, d)
        if self.det(m) != 1:
            raise GroupError(
                f"matrix {m.as_list()} has determinant {self.det(m)}, expected 1",
                {"entries": m.as_list()},
            )
        return m

    def is_central(self, m: Mat2) -> bool:
        return m == self.identity.rep or m == self._minus_identity

    # PSL2 elements

    def canonical_rep(self, m: Mat2) -> Mat2:
        if not self.odd:
            return m
        other = self.mat_neg(m)
        return other if other < m else m

    def canon(self, m: Mat2) -> PElem:
        """The PSL2 element with lift m; canon(A) == canon(-A)."""
        if self.det(m) != 1:
            raise GroupError(f"matrix {list(m)} is not unimodular", {"entries": list(m)})
        return PElem(self.canonical_rep(m), self.q)

    def elem(self, a: int, b: int, c: int, d: int) -> PElem:
        return PElem(self.canonical_rep(self.matrix(a, b, c, d)), self.q)

    def _check(self, *elements: PElem) -> None:
        for x in elements:
            if not isinstance(x, PElem) or x.q != self.q:
                raise GroupError(
                    f"element {x!r} does not belong to PSL2({self.q})",
                    {"q": self.q},
                )

    def mul(self, x: PElem, y: PElem) -> PElem:
        self._check(x, y)
        return PElem(self.canonical_rep(self.mat_mul(x.rep, y.rep)), self.q)

    def inv(self, x: PElem) -> PElem:
        self._check(x)
        return PElem(self.canonical_rep(self.mat_inv(x.rep)), self.q)

    def power(self, x: PElem, n: int) -> PElem:
        self._check(x)
        return PElem(self.canonical_rep(self.mat_pow(x.rep, n)), self.q)

    def conjugate(self, x: PElem, g: PElem) -> PElem:
        """g x g^-1."""
        return self.mul(self.mul(g, x), self.inv(g))

    def product(self, elements: Sequence[PElem]) -> PElem:
        result = self.identity
        for x in elements:
            result = self.mul(result, x)
        return result

    def random_element(self, rng: random.Random) -> PElem:
        """Uniformly random element, drawn through a random first row."""
        f = self.field
        while True:
            a, b = rng.randrange(self.q), rng.randrange(self.q)
            if a or b:
                break
        if a:
            c = rng.randrange(self.q)
            d = f.div(f.add(1, f.mul(b, c)), a)
        else:
            c = f.neg(f.inv(b))
            d = rng.randrange(self.q)
        return PElem(self.canonical_rep(Mat2(a, b, c, d)), self.q)

    # Orders and types

    def order(self, x: PElem) -> int:
        """
        Least n >= 1 with x^n = 1.

        Every order divides p, (q - 1)/d or (q + 1)/d, so only divisors of
        those three bounds are tried.
        """
        self._check(x)
        best = None
        for bound in {self.p, (self.q - 1) // self.d, (self.q + 1) // self.d}:
            if not self.is_central(self.mat_pow(x.rep, bound)):
                continue
            n = bound
            for prime in factorint(bound):
                while n % prime == 0 and self.is_central(self.mat_pow(x.rep, n // prime)):
                    n //= prime
            best = n if best is None else min(best, n)
        if best is None:
            raise GroupError(f"{x.as_list()} has an order outside the element-order bounds")
        return best

    def trace_type(self, alpha: int) -> ElementKind:
        """
        Type shared by every non-identity element with a lift of trace alpha.

        Split iff lambda^2 - alpha*lambda + 1 has two distinct roots in F_q.
        """
        if alpha in (self.two, self.minus_two):
            return ElementKind.UNIPOTENT
        roots = self.field.solve_monic_quadratic(self.field.neg(alpha), 1)
        return ElementKind.SPLIT if len(roots) == 2 else ElementKind.NONSPLIT

    def elem_type(self, x: PElem) -> ElementKind:
        self._check(x)
        if self.is_central(x.rep):
            return ElementKind.IDENTITY
        return self.trace_type(self.trace(x.rep))

    def trace_orbit(self, alpha: int) -> int:
        """The enc-smaller member of {alpha, -alpha}."""
        return min(alpha, self.field.neg(alpha))

    # Conjugacy classes

    def _unipotent_square_class(self, m: Mat2) -> bool:
        f = self.field
        if self.trace(m) != self.two:
            m = self.mat_neg(m)
        # N = A - I
        n11, n12, n21, n22 = f.sub(m.a, 1), m.b, m.c, f.sub(m.d, 1)
        if n11 or n21:
            # v = e1: det[[n11, 1], [n21, 0]]
            value = f.neg(n21)
        else:
            # v = e2: det[[n12, 0], [n22, 1]]
            value = n12
        return f.is_square(value)

    def class_id(self, x: PElem) -> ClassId:
        kind = self.elem_type(x)
        if kind == ElementKind.IDENTITY:
            return ClassId(kind)
        if kind == ElementKind.UNIPOTENT:
            if not self.odd:
                return ClassId(kind)
            return ClassId(kind, unip_square_class=self._unipotent_square_class(x.rep))
        return ClassId(kind, trace_orbit=self.trace_orbit(self.trace(x.rep)))

    def validate_class_id(self, cid: ClassId) -> ClassId:
        """Return cid if it labels a class of this group, else raise GroupError."""
        valid = False
        if cid.kind == ElementKind.IDENTITY:
            valid = cid.trace_orbit is None and cid.unip_square_class is None
        elif cid.kind == ElementKind.UNIPOTENT:
            valid = cid.trace_orbit is None and (cid.unip_square_class is None) != self.odd
        elif isinstance(cid.trace_orbit, int) and 0 <= cid.trace_orbit < self.q:
            alpha = cid.trace_orbit
            valid = (
                cid.unip_square_class is None
                and alpha == self.trace_orbit(alpha)
                and self.trace_type(alpha) == cid.kind
            )
        if not valid:
            raise GroupError(
                f"{cid} does not label a conjugacy class of PSL2({self.q})",
                {"class": str(cid), "q": self.q},
            )
        return cid

    def class_size(self, cid: ClassId) -> int:
        """Class sizes 1, (q^2-1)/d, q(q+1)/kappa, q(q-1)/kappa with kappa = 2 iff alpha = 0."""
        self.validate_class_id(cid)
        q = self.q
        if cid.kind == ElementKind.IDENTITY:
            return 1
        if cid.kind == ElementKind.UNIPOTENT:
            return (q * q - 1) // self.d
        kappa = 2 if cid.trace_orbit == 0 else 1
        if cid.kind == ElementKind.SPLIT:
            return q * (q + 1) // kappa
        return q * (q - 1) // kappa

    def all_class_ids(self) -> List[Tuple[ClassId, int]]:
        """Every class exactly once with its size, in listing order."""
        ids = [ClassId(ElementKind.IDENTITY)]
        if self.odd:
            ids.append(ClassId(ElementKind.UNIPOTENT, unip_square_class=True))
            ids.append(ClassId(ElementKind.UNIPOTENT, unip_square_class=False))
        else:
            ids.append(ClassId(ElementKind.UNIPOTENT))
        for alpha in self.field.elements:
            if alpha != self.trace_orbit(alpha):
                continue
            kind = self.trace_type(alpha)
            if kind != ElementKind.UNIPOTENT:
                ids.append(ClassId(kind, trace_orbit=alpha))
        return [(cid, self.class_size(cid)) for cid in ids]

    def representative(self, cid: ClassId) -> PElem:
        """I; U1 or U1' = [[1, nu], [0, 1]]; the companion matrix [[alpha, -1], [1, 0]]."""
        self.validate_class_id(cid)
        if cid.kind == ElementKind.IDENTITY:
            return self.identity
        if cid.kind == ElementKind.UNIPOTENT:
            top = 1 if cid.unip_square_class in (True, None) else self.field.nonsquare
            return PElem(self.canonical_rep(Mat2(1, top, 0, 1)), self.q)
        return PElem(self.canonical_rep(Mat2(cid.trace_orbit, self.field.neg(1), 1, 0)), self.q)

    def class_order(self, cid: ClassId) -> int:
        return self.order(self.representative(cid))

    def unipotent(self, sign: int = 1, twisted: bool = False) -> Mat2:
        """U_s = [[s, 1], [0, s]] for s = +-1, or U'_s = [[s, nu], [0, s]] when twisted."""
        f = self.field
        s = 1 if sign == 1 else f.neg(1)
        top = f.nonsquare if twisted else 1
        return Mat2(s, top, 0, s)

    def twist(self, m: Mat2) -> Mat2:
        """
        [[a, b], [c, d]] -> [[a, nu*b], [c/nu, d]], conjugation by diag(nu, 1).

        Swaps the two unipotent classes of odd q and fixes every semisimple class.
        """
        if not self.odd:
            raise GroupError("the unipotent classes only split for odd q")
        f = self.field
        nu = f.nonsquare
        return Mat2(m.a, f.mul(nu, m.b), f.div(m.c, nu), m.d)

    # Conjugators and closures

    def _nullspace(self, rows: List[List[int]]) -> List[List[int]]:
        f = self.field
        rows = [list(r) for r in rows]
        width = len(rows[0])
        pivots: List[int] = []
        r = 0
        for col in range(width):
            pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
            if pivot is None:
                continue
            rows[r], rows[pivot] = rows[pivot], rows[r]
            scale = f.inv(rows[r][col])
            rows[r] = [f.mul(v, scale) for v in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][col] != 0:
                    factor = rows[i][col]
                    rows[i] = [f.sub(v, f.mul(factor, pv)) for v, pv in zip(rows[i], rows[r])]
            pivots.append(col)
            r += 1
        basis = []
        for free in (c for c in range(width) if c not in pivots):
            vec = [0] * width
            vec[free] = 1
            for i, pc in enumerate(pivots):
                vec[pc] = f.neg(rows[i][free])
            basis.append(vec)
        return basis

    def conjugator(self, m: Mat2, z: Mat2) -> Optional[Mat2]:
        """
        A matrix g in SL2(q) with g m g^-1 = +-z, or None if the images are not conjugate.

        Solves the linear system g m = t g for t in {z, -z}, then looks for a
        projective point of the solution space with square determinant.
        """
        f = self.field
        if self.is_central(m) or self.is_central(z):
            same = self.canonical_rep(m) == self.canonical_rep(z)
            return Mat2(1, 0, 0, 1) if same else None

        targets = [z, self.mat_neg(z)] if self.odd else [z]
        for t in targets:
            rows = [
                [f.sub(m.a, t.a), m.c, f.neg(t.b), 0],
                [m.b, f.sub(m.d, t.a), 0, f.neg(t.b)],
                [f.neg(t.c), 0, f.sub(m.a, t.d), m.c],
                [0, f.neg(t.c), m.b, f.sub(m.d, t.d)],
            ]
            basis = self._nullspace(rows)
            if not basis:
                continue
            if len(basis) == 1:
                candidates = [basis[0]]
            else:
                v0, v1 = basis[0], basis[1]
                candidates = [v1] + [
                    [f.add(x, f.mul(s, y)) for x, y in zip(v0, v1)] for s in f.elements
                ]
            for vec in candidates:
                g = Mat2(*vec)
                det = self.det(g)
                if det == 0:
                    continue
                root = f.sqrt(det)
                if root is None:
                    continue
                scale = f.inv(root)
                return Mat2(*(f.mul(scale, v) for v in g))
        return None

    def generate(self, gens: Iterable[PElem], budget: Optional[int] = None) -> FrozenSet[Mat2]:
        """
        Canonical lifts of every element of the subgroup generated by gens.

        Raises:
            BudgetExceededError: If the closure grows past the budget
        """
        budget = budget or self.settings.ENUMERATION_BUDGET
        gens = list(gens)
        self._check(*gens)
        reps = [x.rep for x in gens]
        seen = {self.identity.rep}
        frontier = [self.identity.rep]
        while frontier:
            next_frontier = []
            for h in frontier:
                for g in reps:
                    k = self.canonical_rep(self.mat_mul(h, g))
                    if k not in seen:
                        seen.add(k)
                        next_frontier.append(k)
                        if len(seen) > budget:
                            raise BudgetExceededError(
                                f"closure in PSL2({self.q}) exceeded {budget} elements",
                                {"q": self.q, "budget": budget},
                            )
            frontier = next_frontier
        return frozenset(seen)


def group_ctx(field: FieldCtx, settings: Optional[PSL2Settings] = None) -> GroupCtx:
    """PSL2 over the given field."""
    return GroupCtx(field, settings)


def group_for_order(q: int, settings: Optional[PSL2Settings] = None) -> GroupCtx:
    """PSL2(q) for a prime power q."""
    return GroupCtx(field_for_order(q, settings), settings)
