"""Exact integer helpers shared by the closed forms and the oracle.

Python integers are arbitrary precision, so the only work here is pinning
down conventions: binomials vanish outside ``0 <= r <= m`` (including a
negative top argument), and integer ceilings are exact for either sign.
"""

import math


def binomial(m: int, r: int) -> int:
    """Combinatorial binomial coefficient.

    Returns 0 whenever ``r < 0``, ``m < 0`` or ``r > m``. The negative-top
    case deliberately does *not* follow the generalized binomial, since every
    binomial used here counts lattice points.

    >>> binomial(4, 2), binomial(2, 3), binomial(-1, 2)
    (6, 0, 0)
    """
    if r < 0 or m < 0 or r > m:
        return 0
    return math.comb(m, r)


def floor_div(p: int, q: int) -> int:
    if q <= 0:
        raise ValueError(f"divisor must be positive, got {q}")
    return p // q


def ceil_div(p: int, q: int) -> int:
    """Exact ``ceil(p / q)`` for a positive divisor ``q``."""
    if q <= 0:
        raise ValueError(f"divisor must be positive, got {q}")
    return -((-p) // q)
