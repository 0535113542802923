"""Brute-force verification and numeric summability cross-checks."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from omegasum import (
    InfiniteValue,
    PartialSumFormula,
    Polynomial,
    SeriesExpr,
    brute_partial_sum,
    check_formula,
    holder_mean,
    partial_sum_formula,
    standard_part_crosscheck,
)

from _catalog import BY_NAME, CATALOG
from _strategies import series_exprs


class TestBrutePartialSum:
    def test_triangular(self):
        assert brute_partial_sum(BY_NAME["naturals"].series, 5) == 15

    def test_grandi_even_window(self):
        assert brute_partial_sum(BY_NAME["grandi"].series, 2) == 0

    def test_blanked_naturals(self):
        assert brute_partial_sum(BY_NAME["blanked_naturals"].series, 5) == 6

    def test_empty_sum(self):
        assert brute_partial_sum(BY_NAME["naturals"].series, 0) == 0

    def test_below_empty_sum(self):
        with pytest.raises(ValueError):
            brute_partial_sum(BY_NAME["naturals"].series, -1)

    @settings(deadline=None)
    @given(series_exprs(), series_exprs())
    def test_additivity(self, s1, s2):
        n = max(s1.start, 12)
        assert brute_partial_sum(s1 + s2, n) == brute_partial_sum(
            s1, n
        ) + brute_partial_sum(s2, n)


class TestCheckFormula:
    @pytest.mark.parametrize("entry", CATALOG, ids=lambda e: e.name)
    def test_catalog_passes(self, entry):
        report = check_formula(entry.series, 200)
        assert report.passed
        assert report.status == "pass"
        assert report.first_mismatch is None

    def test_zero_series(self):
        assert check_formula(SeriesExpr(), 10).passed

    def test_corrupted_formula_detected(self):
        series = BY_NAME["grandi"].series
        good = partial_sum_formula(series)
        corrupted = PartialSumFormula(
            good.poly + Polynomial([1]),
            good.exp_parts,
            good.correction,
            good.valid_from,
            good.start,
        )
        report = check_formula(series, 50, formula=corrupted)
        assert not report.passed
        n, expected, got = report.first_mismatch
        assert n == good.valid_from
        assert got - expected == 1

    @settings(deadline=None, max_examples=40)
    @given(series_exprs())
    def test_random_series_pass(self, s):
        assert check_formula(s, 60).passed

    def test_report_json_shape(self):
        report = check_formula(BY_NAME["ones"].series, 10, series_id="ones")
        data = report.to_json()
        assert data == {
            "seriesId": "ones",
            "checkedRange": [1, 11],
            "status": "pass",
            "firstMismatch": None,
        }

    def test_failed_report_json(self):
        series = BY_NAME["ones"].series
        bad = PartialSumFormula(Polynomial([5, 1]))
        data = check_formula(series, 5, formula=bad).to_json()
        assert data["status"] == "fail"
        assert data["firstMismatch"] == {"n": 1, "expected": "1", "got": "6"}


class TestHolderMean:
    def test_grandi_cesaro(self):
        assert abs(holder_mean(BY_NAME["grandi"].series, 1, 100_000) - 0.5) <= 1e-3

    def test_zero_series(self):
        assert holder_mean(SeriesExpr(), 3, 100) == 0.0

    def test_alternating_naturals_needs_two_levels(self):
        series = BY_NAME["alternating_naturals"].series
        assert abs(holder_mean(series, 2, 100_000) - 0.25) <= 1e-2

    def test_convergent_geometric(self):
        series = BY_NAME["halves_geometric"].series
        assert abs(holder_mean(series, 1, 100_000) - 2.0) <= 1e-3

    def test_validation(self):
        with pytest.raises(ValueError):
            holder_mean(SeriesExpr(), 0, 10)
        with pytest.raises(ValueError):
            holder_mean(SeriesExpr(), 1, 0)


class TestStandardPartCrosscheck:
    def test_grandi(self):
        report = standard_part_crosscheck(BY_NAME["grandi"].series, 1, 100_000, 1e-3)
        assert report.passed

    def test_zero_series(self):
        assert standard_part_crosscheck(SeriesExpr(), 1, 100, 1e-9).passed

    def test_negated_grandi(self):
        report = standard_part_crosscheck(
            BY_NAME["grandi_negated"].series, 1, 100_000, 1e-3
        )
        assert report.passed

    def test_infinite_value_refused(self):
        with pytest.raises(InfiniteValue):
            standard_part_crosscheck(BY_NAME["naturals"].series, 1, 100, 1e-3)

    def test_tight_tolerance_fails_honestly(self):
        report = standard_part_crosscheck(BY_NAME["grandi"].series, 1, 9, 1e-12)
        assert not report.passed
        n, expected, got = report.first_mismatch
        assert n == 9
        assert expected == F(1, 2)
