"""Dense univariate polynomials with exact integer coefficients.

Coefficients are stored low degree first, so ``coeffs[k]`` is the
coefficient of ``T**k``. Multiplication is plain schoolbook convolution,
``O(deg p * deg q)``; the degrees met here stay in the low thousands and
exactness matters more than asymptotics.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Sequence


@total_ordering
class _MinusInfinity:
    """Degree of the zero polynomial. Compares below every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("-inf-degree")

    def __repr__(self):
        return "MINUS_INFINITY"


MINUS_INFINITY = _MinusInfinity()


def _trim(coeffs: Iterable[int]) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int]) -> "IntPolynomial":
        return cls(tuple(coeffs))

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @property
    def degree(self):
        """Index of the top nonzero coefficient, or ``MINUS_INFINITY``."""
        if not self.coeffs:
            return MINUS_INFINITY
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __call__(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return poly_add(self, -other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return poly_add(other, -self)

    def __mul__(self, other):
        if isinstance(other, int):
            return poly_scale(self, other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return poly_pow(self, n)

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = "t" if k == 1 else f"t^{k}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)


ZERO = IntPolynomial()
ONE = IntPolynomial((1,))


def _coerce(x) -> IntPolynomial:
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial((x,))
    return NotImplemented


def poly_add(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    if len(p) < len(q):
        p, q = q, p
    out = list(p.coeffs)
    for k, c in enumerate(q.coeffs):
        out[k] += c
    return IntPolynomial(tuple(out))


def poly_scale(p: IntPolynomial, c: int) -> IntPolynomial:
    return IntPolynomial(tuple(c * x for x in p.coeffs))


def poly_mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    if p.is_zero() or q.is_zero():
        return ZERO
    if len(p) < len(q):
        p, q = q, p
    out = [0] * (len(p) + len(q) - 1)
    pc = p.coeffs
    for j, b in enumerate(q.coeffs):
        if b == 0:
            continue
        for i, a in enumerate(pc):
            out[i + j] += a * b
    return IntPolynomial(tuple(out))


def poly_pow(p: IntPolynomial, n: int) -> IntPolynomial:
    """``p**n`` by repeated squaring; ``p**0 == 1`` even for ``p == 0``."""
    if n < 0:
        raise ValueError(f"exponent must be nonnegative, got {n}")
    result = ONE
    base = p
    while n:
        if n & 1:
            result = poly_mul(result, base)
        n >>= 1
        if n:
            base = poly_mul(base, base)
    return result


def geometric_block(e: int) -> IntPolynomial:
    """``1 + T + ... + T**(e-1)``."""
    if e < 1:
        raise ValueError(f"block length must be positive, got {e}")
    return IntPolynomial((1,) * e)


def mul_geometric_block(p: IntPolynomial, e: int) -> IntPolynomial:
    """``p * geometric_block(e)`` as a sliding window sum, ``O(deg p + e)``."""
    if e < 1:
        raise ValueError(f"block length must be positive, got {e}")
    if p.is_zero():
        return ZERO
    c = p.coeffs
    out = []
    window = 0
    for k in range(len(c) + e - 1):
        if k < len(c):
            window += c[k]
        if k >= e:
            window -= c[k - e]
        out.append(window)
    return IntPolynomial(tuple(out))


def a_coefficients(n: int, e: int) -> IntPolynomial:
    """Coefficients of ``(1 + T + ... + T**(e-1))**n``, degree ``n*(e-1)``.

    Entry ``i`` counts sequences of ``n`` integers in ``[0, e-1]`` summing
    to ``i``.
    """
    if n < 1:
        raise ValueError(f"power must be positive, got {n}")
    return poly_pow(geometric_block(e), n)


def stride_extract(p: IntPolynomial, e: int) -> IntPolynomial:
    """Keep every ``e``-th coefficient: result[l] = p[l*e]."""
    if e < 1:
        raise ValueError(f"stride must be positive, got {e}")
    return IntPolynomial(p.coeffs[::e])


def eval_at_one(p: IntPolynomial) -> int:
    return sum(p.coeffs)


def one_minus_t_power(j: int) -> IntPolynomial:
    """``(1 - t)**j`` written out with binomial coefficients."""
    out = [1]
    for k in range(1, j + 1):
        out.append(-out[-1] * (j - k + 1) // k)
    return IntPolynomial(tuple(out))


def is_reciprocal(p: IntPolynomial) -> bool:
    return p.coeffs == p.coeffs[::-1]


def is_unimodal(p: IntPolynomial) -> bool:
    c = p.coeffs
    k = 0
    while k + 1 < len(c) and c[k] <= c[k + 1]:
        k += 1
    while k + 1 < len(c) and c[k] >= c[k + 1]:
        k += 1
    return k + 1 >= len(c)
