"""A tour of series values: every series gets an exact hyperreal.

The infinite unit w counts the positive integers, and a series summed from 1
to omega is worth whatever its closed-form partial sum says at n = w.  Run
this file top to bottom; each block prints what it computes.
"""

from fractions import Fraction as F

from omegasum import OMEGA, parse_series, sum_series

print("== Divergent series get finite-looking, exact answers ==")
for text in [
    "sum(i=1..omega, 1)",
    "sum(i=1..omega, i)",
    "sum(i=1..omega, 2*i - 1)",
    "sum(i=1..omega, 2^(i-1))",
]:
    value = sum_series(parse_series(text))
    print(f"{text:38} = {value}")

print()
print("== The odd numbers sum to the square of the ones ==")
ones = sum_series(parse_series("sum(i=1..omega, 1)"))
odds = sum_series(parse_series("sum(i=1..omega, 2*i - 1)"))
print(f"(1+1+1+...)^2 = {ones * ones},  1+3+5+... = {odds}")
assert ones * ones == odds

print()
print("== Convergent series carry their limit plus an infinitesimal tail ==")
halves = sum_series(parse_series("sum(i=1..omega, (1/2)^(i-1))"))
print(f"1 + 1/2 + 1/4 + ...      = {halves}")
print(f"  principal value        = {halves.principal_value()}")
print(f"  standard part          = {halves.standard_part()}")
assert halves.standard_part() == 2

print()
print("== Values are totally ordered, even across orders of infinity ==")
naturals = sum_series(parse_series("sum(i=1..omega, i)"))
powers = sum_series(parse_series("sum(i=1..omega, 2^(i-1))"))
print(f"w < {naturals} ?  {OMEGA < naturals}")
print(f"{naturals} < {powers} ?  {naturals < powers}")
print(f"w + 1 > w ?  {OMEGA + 1 > OMEGA}")

print()
print("== Infinite values have no standard part ==")
print(f"standard part of {naturals} is {naturals.standard_part()}")

print()
print("== Ratios of principal values ==")
s1 = sum_series(parse_series("sum(i=1..omega, 3 + (i-1)*4)"))
s2 = sum_series(parse_series("sum(i=1..omega, 7 + (i-1)*2)"))
print(f"S1 = {s1}")
print(f"S2 = {s2}")
print(f"S1/S2 ~ {s1.ratio_principal(s2)}   (the ratio of the distances, 4/2)")
assert s1.ratio_principal(s2) == F(2)
