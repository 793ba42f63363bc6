"""Brute-force cross-checks for the closed forms in :mod:`veronese`.

The oracle counts bounded compositions directly and takes finite
differences of the resulting Hilbert function. It deliberately uses nothing
from :mod:`veronese` except the parameter type, so agreement between the
two routes is evidence rather than a tautology.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .bigcomb import binomial
from .polyring import IntPolynomial, eval_at_one


class DegreeOverflowError(ArithmeticError):
    """A finite difference beyond index n was nonzero."""


def count_bounded_compositions(total: int, bounds: Sequence[int]) -> int:
    """Number of integer vectors with sum ``total`` and ``0 <= x_j <= bounds[j]``.

    Multiplies the factors ``1 + t + ... + t**b`` one at a time, keeping only
    coefficients up to ``total``; each factor is a running window sum.
    """
    if total < 0:
        return 0
    ways = [1] + [0] * total
    for b in bounds:
        if b < 0:
            raise ValueError(f"bounds must be nonnegative, got {b}")
        nxt = [0] * (total + 1)
        window = 0
        for k in range(total + 1):
            window += ways[k]
            if k > b:
                window -= ways[k - b - 1]
            nxt[k] = window
        ways = nxt
    return ways[total]


def hilbert_function_oracle(vt, i: int) -> int:
    if i < 0:
        raise ValueError(f"degree i must be >= 0, got {i}")
    return count_bounded_compositions(i * vt.d, [i * a for a in vt.a])


def h_numerator_oracle(vt, k_max: int | None = None) -> IntPolynomial:
    """h-vector as the ``n``-th finite difference of the oracle Hilbert function.

    Differences are taken up to ``k_max`` (default ``n + 5``); anything
    nonzero past index ``n`` raises :class:`DegreeOverflowError`.
    """
    n = vt.n
    if k_max is None:
        k_max = n + 5
    if k_max < n:
        raise ValueError(f"k_max must be >= n={n}, got {k_max}")
    values = [hilbert_function_oracle(vt, i) for i in range(k_max + 1)]
    h = []
    for k in range(k_max + 1):
        h.append(
            sum(
                (-1) ** j * binomial(n, j) * values[k - j]
                for j in range(min(k, n) + 1)
            )
        )
    tail = {k: h[k] for k in range(n + 1, k_max + 1) if h[k]}
    if tail:
        raise DegreeOverflowError(f"nonzero h_k beyond n={n} for {vt}: {tail}")
    return IntPolynomial(tuple(h[: n + 1]))


@dataclass
class VerificationReport:
    config: object
    max_i: int
    hilbert_matches: list = field(default_factory=list)
    hvector_match: bool = False
    multiplicity_match: bool = False
    closed_numerator: IntPolynomial | None = None
    oracle_numerator: IntPolynomial | None = None
    error: str | None = None

    @property
    def overall(self) -> bool:
        return (
            self.error is None
            and all(m[3] for m in self.hilbert_matches)
            and self.hvector_match
            and self.multiplicity_match
        )


def verify(vt, max_i: int = 4) -> VerificationReport:
    """Compare every closed form for ``vt`` against the oracle.

    Mismatches (including a degree overflow in the oracle) are recorded in
    the report instead of raised.
    """
    from . import veronese

    if max_i < 1:
        raise ValueError(f"max_i must be >= 1, got {max_i}")
    report = VerificationReport(vt, max_i)
    for i in range(max_i + 1):
        closed = veronese.hilbert_function(vt, i)
        brute = hilbert_function_oracle(vt, i)
        report.hilbert_matches.append((i, closed, brute, closed == brute))

    report.closed_numerator = veronese.h_numerator(vt)
    try:
        report.oracle_numerator = h_numerator_oracle(vt)
    except DegreeOverflowError as exc:
        report.error = str(exc)
        return report
    report.hvector_match = report.closed_numerator == report.oracle_numerator
    report.multiplicity_match = veronese.multiplicity(vt) == eval_at_one(
        report.oracle_numerator
    )
    return report
