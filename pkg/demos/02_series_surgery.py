"""Finite manipulations: what you may do to a series, and what it costs.

Because values come from partial sums, edits that would be "free" in naive
manipulation have exact, visible prices here.  Overrides record each edit
per index, so the bookkeeping is mechanical.
"""

from fractions import Fraction as F

from omegasum import SeriesExpr, brute_partial_sum, parse_series, sum_series

naturals = parse_series("sum(i=1..omega, i)")
print(f"value(1+2+3+...) = {sum_series(naturals)}")

print()
print("== Adding a scalar into the terms adds exactly that scalar ==")
bumped = naturals.add_into_terms({1: 5})
print(f"(5+1) + 2 + 3 + ... = {sum_series(bumped)}")
spread = naturals.add_into_terms({1: F(2), 2: F(3)})
print(f"spread 5 as 2 and 3 = {sum_series(spread)}")
assert sum_series(bumped) == sum_series(spread) == sum_series(naturals) + 5

print()
print("== Removing a term to zero extracts exactly its value ==")
zeroed, extracted = naturals.remove_term(1)
print(f"0 + 2 + 3 + ... = {sum_series(zeroed)},  extracted {extracted}")
assert extracted + sum_series(zeroed) == sum_series(naturals)

print()
print("== Moving the start index changes the term count, hence the value ==")
ones = parse_series("sum(i=1..omega, 1)")
print(f"sum(i=1..omega, 1) = {sum_series(ones)}")
print(f"sum(i=0..omega, 1) = {sum_series(ones.with_start(0))}   (one more term)")
tail = naturals.with_start(2)
print(f"sum(i=2..omega, i) = {sum_series(tail)}")
assert 1 + sum_series(tail) == sum_series(naturals)

print()
print("== But '2 + 3 + 4 + ...' depends on how you write it ==")
rebased = parse_series("sum(i=1..omega, i + 1)")
print(f"sum(i=1..omega, i+1) = {sum_series(rebased)}   (a full omega terms)")
print(f"sum(i=2..omega, i)   = {sum_series(tail)}   (omega - 1 terms)")
print("different exact values, same halo:",
      sum_series(rebased).same_halo(sum_series(tail)))

print()
print("== Finite rearrangements are free ==")
rearranged = naturals.rearrange({1: 3, 3: 2, 2: 1})
print("first terms after moving 1->3, 3->2, 2->1:",
      [rearranged.term_at(i) for i in range(1, 5)])
assert sum_series(rearranged) == sum_series(naturals)
for n in (3, 5, 10):
    assert brute_partial_sum(rearranged, n) == brute_partial_sum(naturals, n)

print()
print("== Mismatched bounds refuse to add ==")
try:
    _ = ones.with_start(0) + naturals
except Exception as exc:
    print(f"start-0 plus start-1: {type(exc).__name__}: {exc}")
