"""
Finite Field Arithmetic

Exact arithmetic in F_p and F_q = F_{p^e} over a polynomial basis, with
square testing, square roots, monic quadratic solving and primitive roots of
unity.

Design Considerations:
- Elements are plain ints: the encoding enc(a) = sum(c_i * p^i) of the
  coefficient vector, so ordering by int is the canonical element order
- Prime fields use direct modular arithmetic
- Small extension fields precompute complete addition and multiplication
  tables; larger ones use exp/log tables built from the enc-smallest
  primitive element
- Contexts are immutable after construction and cached per (p, e)
"""

import logging
from abc import ABC, abstractmethod
from functools import cached_property, lru_cache
from math import gcd
from typing import FrozenSet, List, Optional, Sequence, Tuple

from sympy import factorint, isprime

from src.config.settings import PSL2Settings, get_settings
from src.utils.errors import FieldError

from .polynomials import Poly, format_poly, mulmod, smallest_monic_irreducible

logger = logging.getLogger(__name__)


class FiniteField(ABC):
    """
    Operations shared by F_q and its quadratic extension.

    Subclasses supply addition, negation, multiplication and the coefficient
    view; everything derived from the multiplicative structure lives here.
    """

    p: int
    size: int
    degree: int

    @abstractmethod
    def add(self, a: int, b: int) -> int:
        """Sum of two elements."""

    @abstractmethod
    def neg(self, a: int) -> int:
        """Additive inverse."""

    @abstractmethod
    def mul(self, a: int, b: int) -> int:
        """Product of two elements."""

    @abstractmethod
    def coeffs(self, a: int) -> Tuple[int, ...]:
        """Coordinates of `a` over F_p, low degree first."""

    # Basic derived arithmetic

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def elements(self) -> range:
        """All elements in enc order."""
        return range(self.size)

    def check(self, a: int) -> int:
        """Return `a` unchanged if it encodes an element of this field."""
        if not isinstance(a, int) or not 0 <= a < self.size:
            raise FieldError(
                f"{a!r} is not an element of a field of size {self.size}",
                {"element": repr(a), "size": self.size},
            )
        return a

    def from_int(self, k: int) -> int:
        """Image of an integer under Z -> F_p -> this field."""
        return k % self.p

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            return self.pow(self.inv(a), -n)
        result, base = 1, a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no multiplicative inverse")
        return self.pow(a, self.size - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    # Multiplicative structure

    def multiplicative_order(self, a: int) -> int:
        """Least n >= 1 with a^n = 1."""
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        n = self.size - 1
        for prime in factorint(self.size - 1):
            while n % prime == 0 and self.pow(a, n // prime) == 1:
                n //= prime
        return n

    @cached_property
    def primitive_element(self) -> int:
        """The enc-smallest generator of the multiplicative group."""
        for g in range(1, self.size):
            if self.multiplicative_order(g) == self.size - 1:
                return g
        raise AssertionError("multiplicative group is cyclic")

    def primitive_roots(self, n: int) -> FrozenSet[int]:
        """
        Elements of multiplicative order exactly n.

        Empty when n does not divide size - 1.
        """
        if not isinstance(n, int) or n < 1:
            raise FieldError(f"root of unity order must be a positive integer, got {n!r}")
        if (self.size - 1) % n:
            return frozenset()
        h = self.pow(self.primitive_element, (self.size - 1) // n)
        return frozenset(self.pow(h, k) for k in range(1, n + 1) if gcd(k, n) == 1)

    # Squares and square roots

    def is_square(self, a: int) -> bool:
        if self.p == 2 or a == 0:
            return True
        return self.pow(a, (self.size - 1) // 2) == 1

    @cached_property
    def nonsquare(self) -> int:
        """The enc-smallest non-square (odd characteristic only)."""
        if self.p == 2:
            raise FieldError("every element is a square in characteristic 2")
        for a in range(2, self.size):
            if not self.is_square(a):
                return a
        raise AssertionError("half of the nonzero elements are non-squares")

    def sqrt(self, a: int) -> Optional[int]:
        """
        Square root of `a`, or None when `a` is not a square.

        Of the two roots the enc-smaller is returned.
        """
        if a == 0:
            return 0
        if self.p == 2:
            return self.pow(a, self.size // 2)
        if not self.is_square(a):
            return None

        # Tonelli-Shanks
        odd, s = self.size - 1, 0
        while odd % 2 == 0:
            odd //= 2
            s += 1
        m = s
        c = self.pow(self.nonsquare, odd)
        t = self.pow(a, odd)
        root = self.pow(a, (odd + 1) // 2)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = self.mul(t2, t2)
                i += 1
            b = c
            for _ in range(m - i - 1):
                b = self.mul(b, b)
            m = i
            c = self.mul(b, b)
            t = self.mul(t, c)
            root = self.mul(root, b)
        return min(root, self.neg(root))

    # Traces and quadratic equations

    def absolute_trace(self, a: int) -> int:
        """Trace of `a` down to F_p: a + a^p + ... + a^(p^(degree-1))."""
        total, x = 0, a
        for _ in range(self.degree):
            total = self.add(total, x)
            x = self.pow(x, self.p)
        return total

    @cached_property
    def trace_one_element(self) -> int:
        """The enc-smallest element of absolute trace 1."""
        for a in range(1, self.size):
            if self.absolute_trace(a) == 1:
                return a
        raise AssertionError("the absolute trace is surjective")

    def solve_artin_schreier(self, w: int) -> List[int]:
        """Roots of y^2 + y = w in characteristic 2, in enc order."""
        if self.p != 2:
            raise FieldError("Artin-Schreier form is only used in characteristic 2")
        if self.absolute_trace(w) != 0:
            return []

        squares = [w]
        for _ in range(self.degree - 1):
            squares.append(self.mul(squares[-1], squares[-1]))

        if self.degree % 2 == 1:
            # half-trace
            y = 0
            for i in range(0, self.degree, 2):
                y = self.add(y, squares[i])
        else:
            tau_powers = [self.trace_one_element]
            for _ in range(self.degree - 1):
                tau_powers.append(self.mul(tau_powers[-1], tau_powers[-1]))
            y = 0
            for i in range(self.degree - 1):
                inner = 0
                for j in range(i + 1, self.degree):
                    inner = self.add(inner, tau_powers[j])
                y = self.add(y, self.mul(inner, squares[i]))
        return sorted({y, self.add(y, 1)})

    def solve_monic_quadratic(self, b: int, c: int) -> List[int]:
        """All roots of z^2 + b*z + c in this field, in enc order."""
        if self.p == 2:
            if b == 0:
                return [self.sqrt(c)]
            w = self.div(c, self.mul(b, b))
            return sorted(self.mul(b, y) for y in self.solve_artin_schreier(w))

        disc = self.sub(self.mul(b, b), self.mul(self.from_int(4), c))
        r = self.sqrt(disc)
        if r is None:
            return []
        half = self.inv(self.from_int(2))
        return sorted({
            self.mul(self.sub(r, b), half),
            self.mul(self.sub(self.neg(r), b), half),
        })


class FieldCtx(FiniteField):
    """
    The field F_q = F_p[x]/(f) for the smallest monic irreducible f.

    Attributes:
        p: Characteristic
        e: Degree over F_p
        q: Field size p^e
        defining_poly: Coefficients of f, low degree first, leading 1 included
    """

    def __init__(self, p: int, e: int, defining_poly: Poly, table_limit: int):
        self.p = p
        self.e = e
        self.q = p ** e
        self.size = self.q
        self.degree = e
        self.defining_poly = tuple(defining_poly)

        self._prime = e == 1
        self._add_table: Optional[List[int]] = None
        self._neg_table: Optional[List[int]] = None
        self._mul_table: Optional[List[int]] = None
        if not self._prime and self.q <= table_limit:
            self._build_full_tables()

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, e={self.e}, defining_poly={format_poly(self.defining_poly)!r})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldCtx):
            return NotImplemented
        return (self.p, self.e, self.defining_poly) == (other.p, other.e, other.defining_poly)

    def __hash__(self) -> int:
        return hash((self.p, self.e, self.defining_poly))

    # Coefficient view

    def coeffs(self, a: int) -> Tuple[int, ...]:
        digits = []
        for _ in range(self.e):
            a, digit = divmod(a, self.p)
            digits.append(digit)
        return tuple(digits)

    def element(self, coeffs: Sequence[int]) -> int:
        """Encode a coefficient vector (low degree first)."""
        if len(coeffs) > self.e or any(not 0 <= c < self.p for c in coeffs):
            raise FieldError(f"invalid coefficient vector {list(coeffs)} for F_{self.q}")
        enc = 0
        for c in reversed(coeffs):
            enc = enc * self.p + c
        return enc

    def describe(self) -> dict:
        """Header describing the encoding: characteristic, degree, defining polynomial."""
        return {"p": self.p, "e": self.e, "defining_poly": list(self.defining_poly)}

    # Arithmetic

    def add(self, a: int, b: int) -> int:
        if self._prime:
            s = a + b
            return s - self.p if s >= self.p else s
        if self._add_table is not None:
            return self._add_table[a * self.q + b]
        return self._add_digits(a, b)

    def neg(self, a: int) -> int:
        if self._prime:
            return (self.p - a) % self.p
        if self._neg_table is not None:
            return self._neg_table[a]
        return self._neg_digits(a)

    def mul(self, a: int, b: int) -> int:
        if self._prime:
            return a * b % self.p
        if self._mul_table is not None:
            return self._mul_table[a * self.q + b]
        if a == 0 or b == 0:
            return 0
        exp, log = self._log_tables
        return exp[(log[a] + log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no multiplicative inverse")
        if self._prime:
            return pow(a, self.p - 2, self.p)
        exp, log = self._log_tables
        return exp[(-log[a]) % (self.q - 1)]

    def pow(self, a: int, n: int) -> int:
        if self._prime:
            if n < 0:
                a, n = self.inv(a), -n
            return pow(a, n, self.p)
        return super().pow(a, n)

    @cached_property
    def ext(self):
        """The quadratic extension F_{q^2}, layered over this field."""
        from .quadratic import QuadraticExtension

        return QuadraticExtension(self)

    # Table construction

    def _add_digits(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        result, place = 0, 1
        while a or b:
            a, da = divmod(a, self.p)
            b, db = divmod(b, self.p)
            result += ((da + db) % self.p) * place
            place *= self.p
        return result

    def _neg_digits(self, a: int) -> int:
        if self.p == 2:
            return a
        result, place = 0, 1
        while a:
            a, da = divmod(a, self.p)
            result += ((self.p - da) % self.p) * place
            place *= self.p
        return result

    def _poly_mul(self, a: int, b: int) -> int:
        return self.element(mulmod(self.coeffs(a), self.coeffs(b), self.defining_poly, self.p))

    @cached_property
    def _log_tables(self) -> Tuple[List[int], List[int]]:
        order = self.q - 1
        primes = list(factorint(order))

        def slow_pow(a: int, n: int) -> int:
            result = 1
            while n:
                if n & 1:
                    result = self._poly_mul(result, a)
                a = self._poly_mul(a, a)
                n >>= 1
            return result

        generator = next(
            g for g in range(2, self.q)
            if all(slow_pow(g, order // r) != 1 for r in primes)
        )
        exp = [1] * order
        log = [0] * self.q
        for i in range(1, order):
            exp[i] = self._poly_mul(exp[i - 1], generator)
            log[exp[i]] = i
        logger.debug(f"Built exp/log tables for F_{self.q} from generator {generator}")
        return exp, log

    def _build_full_tables(self) -> None:
        q = self.q
        exp, log = self._log_tables
        self._add_table = [self._add_digits(a, b) for a in range(q) for b in range(q)]
        self._neg_table = [self._neg_digits(a) for a in range(q)]
        mul_table = [0] * (q * q)
        for a in range(1, q):
            for b in range(1, q):
                mul_table[a * q + b] = exp[(log[a] + log[b]) % (q - 1)]
        self._mul_table = mul_table


@lru_cache(maxsize=64)
def _build_field(p: int, e: int, table_limit: int) -> FieldCtx:
    poly = smallest_monic_irreducible(p, e)
    ctx = FieldCtx(p, e, poly, table_limit)
    logger.info(f"Constructed F_{ctx.q} with defining polynomial {format_poly(poly)}")
    return ctx


def make_field(p: int, e: int = 1, settings: Optional[PSL2Settings] = None) -> FieldCtx:
    """
    Build (or fetch) the field of size p^e.

    Args:
        p: Prime characteristic
        e: Extension degree, at least 1
        settings: Optional settings overriding the cached defaults

    Returns:
        FieldCtx whose defining polynomial is the monic irreducible of
        degree e with the smallest tail encoding

    Raises:
        FieldError: If p is not prime, e < 1, or p^e exceeds FIELD_SIZE_LIMIT
    """
    settings = settings or get_settings()
    if not isinstance(p, int) or not isprime(p):
        raise FieldError(f"characteristic must be prime, got {p!r}", {"p": p})
    if not isinstance(e, int) or e < 1:
        raise FieldError(f"extension degree must be a positive integer, got {e!r}", {"e": e})
    if p ** e > settings.FIELD_SIZE_LIMIT:
        raise FieldError(
            f"field size {p}^{e} exceeds the supported limit {settings.FIELD_SIZE_LIMIT}",
            {"p": p, "e": e, "limit": settings.FIELD_SIZE_LIMIT},
        )
    return _build_field(p, e, settings.ARITHMETIC_TABLE_LIMIT)


def field_for_order(q: int, settings: Optional[PSL2Settings] = None) -> FieldCtx:
    """Field of size q, rejecting anything that is not a prime power."""
    p, e = prime_power(q)
    return make_field(p, e, settings)


def prime_power(q: int) -> Tuple[int, int]:
    """Split a prime power q into (p, e)."""
    valid = isinstance(q, int) and not isinstance(q, bool) and q >= 2
    factors = factorint(q) if valid else {}
    if len(factors) != 1:
        raise FieldError(f"{q!r} is not a prime power", {"q": q})
    (p, e), = factors.items()
    return int(p), int(e)
