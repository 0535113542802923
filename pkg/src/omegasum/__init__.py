"""Exact hyperreal values for convergent and divergent infinite series.

A series summed from a fixed start index to the infinite bound omega gets an
exact closed-form partial-sum formula; evaluating that formula at omega
yields a hyperreal value (a finite formal sum of terms ``c * w^p * b^w``).
Everything is exact rational arithmetic, every closed form can be verified
against a brute-force oracle, and finite values can be cross-checked against
iterated Cesaro means.
"""

from .errors import (
    BadBounds,
    BoundMismatch,
    DegreeLimit,
    IndexBeforeStart,
    InfiniteValue,
    NegativeBase,
    NonPositiveBase,
    NonPositiveRatio,
    NotAPermutation,
    OmegasumError,
    ParseError,
    UnsupportedForm,
    UnsupportedOverride,
    UnsupportedRatio,
)
from .hyperreal import OMEGA, Hyperreal, HyperTerm, eval_poly_at_shifted_omega
from .oracle import (
    VerificationReport,
    brute_partial_sum,
    check_formula,
    holder_mean,
    standard_part_crosscheck,
)
from .polynomial import Polynomial
from .rationals import Rational, rational
from .series import SeriesAtom, SeriesExpr, arithmetic_series, geometric_series
from .summation import (
    DEFAULT_MAX_DEGREE,
    EvalConfig,
    PartialSumFormula,
    antidifference_polygeom,
    arithmetic_series_value,
    bernoulli_numbers,
    evaluate_at_omega,
    faulhaber,
    geometric_series_value,
    partial_sum_formula,
    sum_series,
)
from .syntax import (
    GRAMMAR,
    SERIES_EXAMPLES,
    VALUE_EXAMPLES,
    format_hyperreal,
    format_series,
    parse_hyperreal,
    parse_series,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # numbers
    "Rational",
    "rational",
    "Polynomial",
    "HyperTerm",
    "Hyperreal",
    "OMEGA",
    "eval_poly_at_shifted_omega",
    # series
    "SeriesAtom",
    "SeriesExpr",
    "arithmetic_series",
    "geometric_series",
    # summation
    "DEFAULT_MAX_DEGREE",
    "EvalConfig",
    "PartialSumFormula",
    "bernoulli_numbers",
    "faulhaber",
    "antidifference_polygeom",
    "partial_sum_formula",
    "evaluate_at_omega",
    "sum_series",
    "arithmetic_series_value",
    "geometric_series_value",
    # oracle
    "VerificationReport",
    "brute_partial_sum",
    "check_formula",
    "holder_mean",
    "standard_part_crosscheck",
    # text
    "GRAMMAR",
    "SERIES_EXAMPLES",
    "VALUE_EXAMPLES",
    "parse_series",
    "parse_hyperreal",
    "format_series",
    "format_hyperreal",
    # errors
    "OmegasumError",
    "IndexBeforeStart",
    "BoundMismatch",
    "NotAPermutation",
    "UnsupportedRatio",
    "UnsupportedOverride",
    "DegreeLimit",
    "NegativeBase",
    "NonPositiveRatio",
    "InfiniteValue",
    "ParseError",
    "UnsupportedForm",
    "BadBounds",
    "NonPositiveBase",
]
