"""
Element orders of PSL2(q): the q-minimal and q-good predicates and the orders table.
"""

import logging
from math import gcd
from typing import List, Set

from sympy import divisors

from src.fields.finite_field import prime_power
from src.utils.errors import GroupError

from .models import OrdersRow

logger = logging.getLogger(__name__)


def element_orders(q: int) -> Set[int]:
    """
    Every order n > 1 realized by an element of PSL2(q).

    These are p together with the divisors of (q - 1)/d and (q + 1)/d, each
    of which is realized inside a cyclic torus.
    """
    p, _ = prime_power(q)
    d = gcd(2, q - 1)
    orders = {p}
    for bound in ((q - 1) // d, (q + 1) // d):
        orders.update(n for n in divisors(bound) if n > 1)
    return orders


def is_q_minimal(q: int, n: int) -> bool:
    """
    True iff n is realized in PSL2(p^e) but in no PSL2(p^f) with f < e.

    For semisimple orders this is: the least f with p^f = +-1 mod gcd(2, n)*n
    equals e. The unipotent order p is already realized in PSL2(p), so it is
    q-minimal only when q is prime.

    Raises:
        GroupError: If PSL2(q) has no element of order n
    """
    p, e = prime_power(q)
    if n not in element_orders(q):
        raise GroupError(
            f"PSL2({q}) has no element of order {n}",
            {"q": q, "n": n},
        )
    if n == p:
        return e == 1

    modulus = gcd(2, n) * n
    power = 1
    for f in range(1, 2 * modulus + 1):
        power = power * p % modulus
        if power in (1, modulus - 1):
            return f == e
    raise AssertionError(f"p = {p} is not a unit modulo {modulus}")


def is_q_good(q: int, n: int) -> bool:
    """n odd dividing q - 1 or q + 1, or n even with 4n dividing q - 1 or q + 1."""
    if n % 2:
        return (q - 1) % n == 0 or (q + 1) % n == 0
    return (q - 1) % (4 * n) == 0 or (q + 1) % (4 * n) == 0


def orders_table(q: int) -> OrdersRow:
    """The q-minimal semisimple orders of PSL2(q), split by q-goodness."""
    p, _ = prime_power(q)
    semisimple = sorted(n for n in element_orders(q) if n != p)
    minimal: List[int] = [n for n in semisimple if is_q_minimal(q, n)]
    row = OrdersRow(
        q=q,
        unipotent_order=p,
        minimal_good=[n for n in minimal if is_q_good(q, n)],
        minimal_not_good=[n for n in minimal if not is_q_good(q, n)],
    )
    logger.debug(f"Orders row for q={q}: good {row.minimal_good}, not good {row.minimal_not_good}")
    return row


def orders_table_upto(qmax: int) -> List[OrdersRow]:
    """Rows for every prime power 2 <= q <= qmax."""
    rows = []
    for q in range(2, qmax + 1):
        try:
            prime_power(q)
        except ValueError:
            continue
        rows.append(orders_table(q))
    return rows
