"""Ground truth by brute force.

Closed forms are only trusted after they reproduce exact term-by-term partial
sums over a window, and finite values are cross-checked against classical
summability: the k-times iterated Cesaro (Holder) mean of the partial sums
should approach the standard part.  Everything here is exact except the mean
estimates, which are deliberately floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import InfiniteValue
from .series import SeriesExpr
from .summation import (
    DEFAULT_MAX_DEGREE,
    EvalConfig,
    PartialSumFormula,
    partial_sum_formula,
    sum_series,
)

__all__ = [
    "VerificationReport",
    "brute_partial_sum",
    "check_formula",
    "holder_mean",
    "standard_part_crosscheck",
]


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one verification run.

    ``first_mismatch`` is ``(n, expected, got)`` with the brute-force value as
    the expectation; the report passes exactly when it is absent.
    """

    series_id: str
    checked_range: tuple[int, int]
    first_mismatch: Optional[tuple[int, Fraction, Fraction]] = None

    @property
    def passed(self) -> bool:
        return self.first_mismatch is None

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        mismatch = None
        if self.first_mismatch is not None:
            n, expected, got = self.first_mismatch
            mismatch = {"n": n, "expected": str(expected), "got": str(got)}
        return {
            "seriesId": self.series_id,
            "checkedRange": list(self.checked_range),
            "status": self.status,
            "firstMismatch": mismatch,
        }


def brute_partial_sum(series: SeriesExpr, n: int) -> Fraction:
    """Exact sum of the terms from the start index through n (empty sum is 0)."""
    if n < series.start - 1:
        raise ValueError(f"n must be at least start - 1 = {series.start - 1}")
    total = Fraction(0)
    for i in range(series.start, n + 1):
        total += series.term_at(i)
    return total


def check_formula(
    series: SeriesExpr,
    count: int = 200,
    formula: Optional[PartialSumFormula] = None,
    series_id: Optional[str] = None,
    max_degree: int = DEFAULT_MAX_DEGREE,
) -> VerificationReport:
    """Compare a closed form against brute force on a window of partial sums.

    Checks exact rational equality at every n in [valid_from, valid_from + count].
    A formula may be passed in explicitly (e.g. a deliberately corrupted one);
    by default the engine's own is derived and checked.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if formula is None:
        formula = partial_sum_formula(series, max_degree)
    label = series_id if series_id is not None else str(series)
    lo = formula.valid_from
    hi = lo + count
    running = brute_partial_sum(series, lo - 1)
    powers = {r: r ** (lo - 1) for r, _ in formula.exp_parts}
    for n in range(lo, hi + 1):
        running += series.term_at(n)
        predicted = formula.poly(n) + formula.correction
        for r, q in formula.exp_parts:
            powers[r] *= r
            predicted += q(n) * powers[r]
        if predicted != running:
            return VerificationReport(label, (lo, hi), (n, running, predicted))
    return VerificationReport(label, (lo, hi))


def _pow_float(base: float, exponent: int) -> float:
    try:
        return base**exponent
    except OverflowError:
        if base > 0 or exponent % 2 == 0:
            return math.inf
        return -math.inf
    except ZeroDivisionError:
        return math.inf


def holder_mean(series: SeriesExpr, k: int, count: int) -> float:
    """k-times iterated arithmetic mean of the first ``count`` partial sums.

    A floating-point estimate: terms, partial sums and means are accumulated
    as floats (exactness lives in :func:`brute_partial_sum`).  k = 1 is the
    plain Cesaro mean; k = 2 also averages the means, which is needed for
    series like 1 - 2 + 3 - 4 + ...
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if count < 1:
        raise ValueError("count must be >= 1")
    atoms = [(float(a.coeff), a.power, float(a.ratio)) for a in series.atoms]
    overrides = {i: float(v) for i, v in series.overrides.items()}
    sums = []
    running = 0.0
    for j in range(count):
        idx = series.start + j
        if idx in overrides:
            running += overrides[idx]
        else:
            for coeff, power, ratio in atoms:
                running += coeff * _pow_float(float(idx), power) * _pow_float(ratio, idx)
        sums.append(running)
    level = sums
    for _ in range(k):
        acc = 0.0
        means = []
        for j, value in enumerate(level, start=1):
            acc += value
            means.append(acc / j)
        level = means
    return level[-1]


def standard_part_crosscheck(
    series: SeriesExpr,
    k: int,
    count: int,
    tol: float,
    config: Optional[EvalConfig] = None,
) -> VerificationReport:
    """Check the Holder-k mean against the standard part of the exact value.

    Raises InfiniteValue when the value has no finite standard part (or the
    mean estimate itself diverged to a non-finite float).
    """
    value = sum_series(series, config)
    std = value.standard_part()
    if std is None:
        raise InfiniteValue("the series value has no finite standard part")
    estimate = holder_mean(series, k, count)
    if not math.isfinite(estimate):
        raise InfiniteValue("the iterated mean estimate did not stay finite")
    label = f"{series} [holder-{k}, N={count}]"
    if abs(estimate - float(std)) <= tol:
        return VerificationReport(label, (1, count))
    return VerificationReport(label, (1, count), (count, std, Fraction(estimate)))
