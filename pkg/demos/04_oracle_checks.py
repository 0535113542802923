"""Trust, but verify: brute force and classical summability as oracles.

Every closed form can be replayed against exact term-by-term partial sums,
and every finite value can be compared with the iterated Cesaro mean of the
partial sums, which is what classical summability assigns to these series.
"""

import json

from omegasum import (
    PartialSumFormula,
    Polynomial,
    check_formula,
    holder_mean,
    parse_series,
    partial_sum_formula,
    standard_part_crosscheck,
    sum_series,
)

print("== Formula vs brute force, exact equality over a 200-point window ==")
for text in [
    "sum(i=1..omega, i)",
    "sum(i=1..omega, (-1)^(i+1))",
    "sum(i=1..omega, i*(((-1)^i + 1)/2))",
    "sum(i=1..omega, i^3*2^i)",
]:
    report = check_formula(parse_series(text), 200, series_id=text)
    print(f"{report.status}: {text} on {report.checked_range}")
    assert report.passed

print()
print("== A corrupted formula is caught at the first window point ==")
grandi = parse_series("sum(i=1..omega, (-1)^(i+1))")
good = partial_sum_formula(grandi)
corrupted = PartialSumFormula(
    good.poly + Polynomial([1]), good.exp_parts, good.correction,
    good.valid_from, good.start,
)
report = check_formula(grandi, 50, formula=corrupted, series_id="corrupted grandi")
print(json.dumps(report.to_json()))
assert not report.passed

print()
print("== Iterated Cesaro means land on the standard parts ==")
cases = [
    ("sum(i=1..omega, (-1)^(i+1))", 1),
    ("sum(i=1..omega, (-1)^i)", 1),
    ("sum(i=1..omega, i*(-1)^(i-1))", 2),
    ("sum(i=1..omega, (1/2)^(i-1))", 1),
]
for text, k in cases:
    series = parse_series(text)
    exact = sum_series(series).standard_part()
    mean = holder_mean(series, k, 100_000)
    print(f"holder-{k} mean {mean:+.6f}  vs standard part {str(exact):>4}   {text}")

print()
print("== The same comparison, packaged as a verification report ==")
report = standard_part_crosscheck(parse_series("sum(i=1..omega, (-1)^(i+1))"), 1, 100_000, 1e-3)
print(json.dumps(report.to_json()))
assert report.passed
