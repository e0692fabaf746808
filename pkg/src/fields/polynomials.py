"""
Defining polynomials over prime fields.

Polynomials are handled as coefficient tuples ordered low degree first,
(c0, c1, ..., 1), which is also the order in which candidates are compared
when searching for the smallest monic irreducible. The dense arithmetic itself
is delegated to sympy's GF(p)[x] toolkit, which expects high degree first.
"""

import itertools
import logging
from functools import lru_cache
from typing import List, Sequence, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_mul, gf_rem

logger = logging.getLogger(__name__)

Poly = Tuple[int, ...]


def to_dense(coeffs: Sequence[int]) -> List[int]:
    """Convert low-first coefficients to sympy's high-first dense list."""
    dense = list(reversed([c for c in coeffs]))
    while len(dense) > 1 and dense[0] == 0:
        dense.pop(0)
    return [ZZ(c) for c in dense]


def from_dense(dense: Sequence[int], length: int) -> Poly:
    """Convert a sympy dense list back to `length` low-first coefficients."""
    low_first = [int(c) for c in reversed(dense)]
    low_first.extend([0] * (length - len(low_first)))
    return tuple(low_first[:length])


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """True iff the polynomial (low-first coefficients) is irreducible over F_p."""
    return bool(gf_irreducible_p(to_dense(coeffs), p, ZZ))


@lru_cache(maxsize=None)
def smallest_monic_irreducible(p: int, e: int) -> Poly:
    """
    Lexicographically smallest monic irreducible polynomial of degree e.

    Candidates x^e + c_{e-1}x^{e-1} + ... + c0 are scanned in increasing
    order of c0 + c1*p + ... + c_{e-1}*p^(e-1), the enc of the tail, so
    x^3 + x + 1 comes before x^3 + x^2 + 1.

    Returns:
        Coefficients (c0, ..., c_{e-1}, 1)
    """
    for tail in itertools.product(range(p), repeat=e):
        # product varies the last position fastest; that position is c0
        candidate = tuple(reversed(tail)) + (1,)
        if is_irreducible(candidate, p):
            logger.debug(f"Defining polynomial for F_{p}^{e}: {format_poly(candidate)}")
            return candidate
    raise AssertionError(f"no irreducible polynomial of degree {e} over F_{p}")


def mulmod(a: Sequence[int], b: Sequence[int], modulus: Sequence[int], p: int) -> Poly:
    """Product of two residues modulo the defining polynomial, low-first."""
    product = gf_mul(to_dense(a), to_dense(b), p, ZZ)
    reduced = gf_rem(product, to_dense(modulus), p, ZZ)
    return from_dense(reduced, len(modulus) - 1)


def format_poly(coeffs: Sequence[int], var: str = "x") -> str:
    """Human-readable form, highest degree first, e.g. 'x^3 + x + 1'."""
    terms = []
    for power in range(len(coeffs) - 1, -1, -1):
        c = coeffs[power]
        if c == 0:
            continue
        if power == 0:
            terms.append(str(c))
        else:
            monomial = var if power == 1 else f"{var}^{power}"
            terms.append(monomial if c == 1 else f"{c}{monomial}")
    return " + ".join(terms) if terms else "0"
