"""Closed forms for the algebra of Veronese type V(a; d).

V(a; d) is generated by the monomials x^alpha with |alpha| = d and
alpha_i <= a_i, graded so that every generator has degree 1. Every formula
below is a signed sum over the subsets S of {1..n} with cap sum
sigma(S) < d, and depends on S only through ``(|S|, sigma(S))``. The subsets
are therefore never listed: a knapsack DP counts them per
``(size, sum)`` cell, which costs ``O(n * d**2)`` instead of ``O(2**n)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .bigcomb import binomial, ceil_div
from .polyring import (
    ZERO,
    IntPolynomial,
    a_coefficients,
    eval_at_one,
    is_reciprocal,
    mul_geometric_block,
    one_minus_t_power,
    poly_add,
    poly_mul,
    poly_scale,
    stride_extract,
)


class VeroneseError(ValueError):
    """Invalid parameters for an algebra of Veronese type."""


class InvalidDegreeError(VeroneseError):
    pass


class TooFewVariablesError(VeroneseError):
    pass


class CapOutOfRangeError(VeroneseError):
    pass


class DegenerateAlgebraError(VeroneseError):
    pass


class InternalConsistencyError(RuntimeError):
    """A computed series violated an invariant that always holds."""


@dataclass(frozen=True)
class VeroneseType:
    a: tuple
    d: int

    @property
    def n(self) -> int:
        return len(self.a)

    def __str__(self):
        return f"V({','.join(map(str, self.a))};{self.d})"


def make_veronese(a: Sequence[int], d: int) -> VeroneseType:
    """Validate caps ``a`` and degree ``d``; caps are sorted ascending."""
    caps = tuple(sorted(int(x) for x in a))
    if d < 1:
        raise InvalidDegreeError(f"degree d must be >= 1, got {d}")
    if len(caps) < 2:
        raise TooFewVariablesError(f"need at least 2 variables, got {len(caps)}")
    bad = [x for x in caps if not 1 <= x <= d]
    if bad:
        raise CapOutOfRangeError(f"caps must lie in [1, {d}], got {bad}")
    if sum(caps) <= d:
        raise DegenerateAlgebraError(
            f"sum of caps must exceed d={d}, got {sum(caps)}"
        )
    return VeroneseType(caps, int(d))


@dataclass(frozen=True)
class SubsetStatistics:
    """Counts of subsets with cap sum below ``d``, by size and sum.

    ``table[s][sigma]`` is stored for ``s <= min(n, d - 1)`` only; a subset
    of size ``s`` has cap sum at least ``s``, so larger rows are all zero.
    """

    n: int
    d: int
    table: tuple

    def count(self, s: int, sigma: int) -> int:
        if 0 <= s < len(self.table) and 0 <= sigma < self.d:
            return self.table[s][sigma]
        return 0

    def entries(self) -> Iterator[tuple]:
        """Nonzero cells as ``(size, sum, count)``."""
        for s, row in enumerate(self.table):
            for sigma, c in enumerate(row):
                if c:
                    yield s, sigma, c

    def as_dict(self) -> dict:
        return {(s, sigma): c for s, sigma, c in self.entries()}

    def total(self) -> int:
        return sum(c for _, _, c in self.entries())


def subset_statistics(vt: VeroneseType) -> SubsetStatistics:
    d = vt.d
    rows = min(vt.n, d - 1) + 1
    table = [[0] * d for _ in range(rows)]
    table[0][0] = 1
    for k, cap in enumerate(vt.a):
        # sizes descend so each cap joins a subset at most once
        for s in range(min(k + 1, rows - 1), 0, -1):
            src, dst = table[s - 1], table[s]
            for sigma in range(d - 1, cap - 1, -1):
                if src[sigma - cap]:
                    dst[sigma] += src[sigma - cap]
    return SubsetStatistics(vt.n, d, tuple(tuple(r) for r in table))


def subset_statistics_naive(vt: VeroneseType) -> SubsetStatistics:
    """Same table by visiting all ``2**n`` subsets. Baseline for benchmarks."""
    n, d = vt.n, vt.d
    rows = min(n, d - 1) + 1
    table = [[0] * d for _ in range(rows)]
    sums = [0] * (1 << n)
    sizes = [0] * (1 << n)
    caps = vt.a
    for mask in range(1, 1 << n):
        low = mask & -mask
        rest = mask ^ low
        sums[mask] = sums[rest] + caps[low.bit_length() - 1]
        sizes[mask] = sizes[rest] + 1
    for mask in range(1 << n):
        if sums[mask] < d:
            table[sizes[mask]][sums[mask]] += 1
    return SubsetStatistics(n, d, tuple(tuple(r) for r in table))


def hilbert_function(vt: VeroneseType, i: int) -> int:
    """Number of monomials of normalized degree ``i`` in V(a; d)."""
    if i < 0:
        raise ValueError(f"degree i must be >= 0, got {i}")
    n, d = vt.n, vt.d
    total = 0
    for s, sigma, count in subset_statistics(vt).entries():
        term = count * binomial(i * (d - sigma) - s + n - 1, n - 1)
        total += -term if s & 1 else term
    return total


def ehrhart_hypersimplex(n: int, d: int, i: int) -> int:
    """Lattice points in the ``i``-th dilate of the hypersimplex Delta(n, d)."""
    if not 1 <= d < n:
        raise ValueError(f"need 1 <= d < n, got n={n}, d={d}")
    if i < 0:
        raise ValueError(f"dilation i must be >= 0, got {i}")
    return sum(
        (-1) ** s * binomial(n, s) * binomial(i * (d - s) - s + n - 1, n - 1)
        for s in range(d)
    )


def _strided_powers(e: int, m_lo: int, m_hi: int) -> dict:
    """``{m: stride_extract(a_coefficients(m, e), e)}`` for m in [m_lo, m_hi].

    Powers of the block are built one factor at a time with the sliding
    window product, so the whole family costs about as much as one power.
    """
    out = {}
    full = IntPolynomial((1,))
    for m in range(1, m_hi + 1):
        full = mul_geometric_block(full, e)
        if m >= m_lo:
            out[m] = stride_extract(full, e)
    return out


def h_numerator(vt: VeroneseType) -> IntPolynomial:
    """Numerator of the Hilbert series written over ``(1 - t)**n``."""
    n, d = vt.n, vt.d
    entries = list(subset_statistics(vt).entries())

    # for each block length e = d - sigma, the range of powers n - j needed
    need = {}
    for s, sigma, _ in entries:
        e = d - sigma
        lo = need.get(e, n)
        need[e] = min(lo, n - s)
    family = {}
    for e, m_lo in need.items():
        for m, g in _strided_powers(e, max(m_lo, 1), n).items():
            family[m, e] = g

    numerator = ZERO
    for s, sigma, count in entries:
        e = d - sigma
        inner = ZERO
        for j in range(s + 1):
            c = binomial(s, j)
            term = poly_mul(one_minus_t_power(j), family[n - j, e])
            inner = poly_add(inner, poly_scale(term, -c if j & 1 else c))
        numerator = poly_add(numerator, poly_scale(inner, -count if s & 1 else count))
    return numerator


@dataclass(frozen=True)
class HilbertSeries:
    numerator: IntPolynomial
    denominator_exponent: int

    def coefficient(self, i: int) -> int:
        """Coefficient of ``t**i`` in the expanded series."""
        n = self.denominator_exponent
        return sum(
            h * binomial(i - k + n - 1, n - 1)
            for k, h in enumerate(self.numerator.coeffs)
            if k <= i
        )

    def __str__(self):
        return f"({self.numerator}) / (1 - t)^{self.denominator_exponent}"


def hilbert_series(vt: VeroneseType) -> HilbertSeries:
    num = h_numerator(vt)
    if num[0] != 1:
        raise InternalConsistencyError(f"h_0 = {num[0]} for {vt}, expected 1")
    if eval_at_one(num) <= 0:
        raise InternalConsistencyError(f"numerator vanishes at t=1 for {vt}")
    if num.degree > vt.n:
        raise InternalConsistencyError(f"numerator degree {num.degree} > n for {vt}")
    return HilbertSeries(num, vt.n)


def multiplicity(vt: VeroneseType) -> int:
    n, d = vt.n, vt.d
    total = 0
    for s, sigma, count in subset_statistics(vt).entries():
        term = count * (d - sigma) ** (n - 1)
        total += -term if s & 1 else term
    return total


def a_invariant(vt: VeroneseType) -> int:
    """Degree of the Hilbert series as a rational function."""
    return h_numerator(vt).degree - vt.n


def a_invariant_bound(vt: VeroneseType) -> tuple:
    """``(-ceil(n/d), n >= d)``; the bound is only guaranteed when applicable."""
    return -ceil_div(vt.n, vt.d), vt.n >= vt.d


@dataclass(frozen=True)
class ClassicalReport:
    gorenstein: bool
    multiplicity: int
    a_invariant: int
    h_vector: IntPolynomial


def classical_report(n: int, d: int) -> ClassicalReport:
    """Invariants of the classical Veronese algebra V(d, ..., d; d)."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    h = stride_extract(a_coefficients(n, d), d)
    gorenstein = n % d == 0
    if gorenstein != is_reciprocal(h):
        raise InternalConsistencyError(
            f"reciprocity of {h} disagrees with d | n for n={n}, d={d}"
        )
    return ClassicalReport(gorenstein, d ** (n - 1), -ceil_div(n, d), h)


__all__ = [
    "VeroneseType",
    "SubsetStatistics",
    "HilbertSeries",
    "ClassicalReport",
    "make_veronese",
    "subset_statistics",
    "subset_statistics_naive",
    "hilbert_function",
    "ehrhart_hypersimplex",
    "h_numerator",
    "hilbert_series",
    "multiplicity",
    "a_invariant",
    "a_invariant_bound",
    "classical_report",
]
