"""Exact Hilbert functions and Hilbert series of algebras of Veronese type."""

from .bigcomb import binomial, ceil_div, floor_div
from .polyring import (
    IntPolynomial,
    a_coefficients,
    eval_at_one,
    geometric_block,
    poly_add,
    poly_mul,
    poly_pow,
    stride_extract,
)
from .veronese import (
    ClassicalReport,
    HilbertSeries,
    SubsetStatistics,
    VeroneseType,
    a_invariant,
    a_invariant_bound,
    classical_report,
    ehrhart_hypersimplex,
    h_numerator,
    hilbert_function,
    hilbert_series,
    make_veronese,
    multiplicity,
    subset_statistics,
)
from .oracle import (
    VerificationReport,
    count_bounded_compositions,
    h_numerator_oracle,
    hilbert_function_oracle,
    verify,
)

__version__ = "0.1.0"
