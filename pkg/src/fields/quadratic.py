"""
Quadratic extension F_{q^2} layered over F_q.

Elements are a0 + a1*z with a0, a1 in F_q, encoded as a0 + a1*q. The
generator z satisfies z^2 = nu for odd q (nu the enc-smallest non-square of
F_q) and z^2 + z + nu = 0 for even q (nu the enc-smallest element of absolute
trace 1), so the Frobenius b -> b^q has a closed form in both cases.
"""

import logging
from typing import Tuple

from src.utils.errors import FieldError

from .finite_field import FieldCtx, FiniteField

logger = logging.getLogger(__name__)


class QuadraticExtension(FiniteField):
    """
    F_{q^2} as a two-dimensional vector space over its base field.

    Attributes:
        base: The field F_q
        q: Size of the base field
        nu: The constant defining the extension
        modulus: (c0, c1) with z^2 + c1*z + c0 = 0
    """

    def __init__(self, base: FieldCtx):
        self.base = base
        self.p = base.p
        self.q = base.q
        self.size = base.q * base.q
        self.degree = 2 * base.e

        if base.p == 2:
            self.nu = base.trace_one_element
            self.modulus: Tuple[int, int] = (self.nu, 1)
        else:
            self.nu = base.nonsquare
            self.modulus = (base.neg(self.nu), 0)

        logger.debug(f"F_{self.size} defined over F_{self.q} by z^2 + {self.modulus[1]}z + {self.modulus[0]}")

    def __repr__(self) -> str:
        return f"QuadraticExtension(base={self.base!r}, nu={self.nu})"

    @property
    def generator(self) -> int:
        """Encoding of the adjoined element z."""
        return self.q

    def split(self, b: int) -> Tuple[int, int]:
        """Coordinates (a0, a1) of b = a0 + a1*z."""
        a1, a0 = divmod(b, self.q)
        return a0, a1

    def join(self, a0: int, a1: int) -> int:
        return a0 + a1 * self.q

    def coeffs(self, b: int) -> Tuple[int, ...]:
        a0, a1 = self.split(b)
        return self.base.coeffs(a0) + self.base.coeffs(a1)

    def add(self, a: int, b: int) -> int:
        x0, x1 = self.split(a)
        y0, y1 = self.split(b)
        return self.join(self.base.add(x0, y0), self.base.add(x1, y1))

    def neg(self, a: int) -> int:
        x0, x1 = self.split(a)
        return self.join(self.base.neg(x0), self.base.neg(x1))

    def mul(self, a: int, b: int) -> int:
        f = self.base
        x0, x1 = self.split(a)
        y0, y1 = self.split(b)
        c0, c1 = self.modulus
        top = f.mul(x1, y1)
        r0 = f.sub(f.mul(x0, y0), f.mul(c0, top))
        r1 = f.sub(f.add(f.mul(x0, y1), f.mul(x1, y0)), f.mul(c1, top))
        return self.join(r0, r1)

    # Relation to the base field

    def embed(self, a: int) -> int:
        """Image of a base-field element."""
        return self.base.check(a)

    def is_base(self, b: int) -> bool:
        return b < self.q

    def restrict(self, b: int) -> int:
        """Inverse of embed; the element must be Frobenius-fixed."""
        if not self.is_base(b):
            raise FieldError(
                f"{b} does not lie in the base field F_{self.q}",
                {"element": b, "q": self.q},
            )
        return b

    def frobenius(self, b: int) -> int:
        """b -> b^q."""
        a0, a1 = self.split(b)
        if self.p == 2:
            # z^q = z + 1
            return self.join(self.base.add(a0, a1), a1)
        # z^q = -z
        return self.join(a0, self.base.neg(a1))

    def norm(self, b: int) -> int:
        """b * b^q, an element of the base field."""
        return self.restrict(self.mul(b, self.frobenius(b)))

    def relative_trace(self, b: int) -> int:
        """b + b^q, an element of the base field."""
        return self.restrict(self.add(b, self.frobenius(b)))


def quad_ext(ctx: FieldCtx) -> QuadraticExtension:
    """The quadratic extension of `ctx`, built once per field."""
    return ctx.ext
