"""Oscillating series: sign factors, blanking, spacing and the vanishing rule.

Closed forms for alternating series contain a (-1)^n part.  At n = w that
factor is taken to vanish (it has no determinable sign), which is exactly
what makes the classical summability constants appear in the values.
"""

from fractions import Fraction as F

from omegasum import (
    EvalConfig,
    OMEGA,
    parse_series,
    partial_sum_formula,
    sum_series,
)

print("== Grandi's series and its mirror ==")
grandi = parse_series("sum(i=1..omega, (-1)^(i+1))")
mirror = parse_series("sum(i=1..omega, (-1)^i)")
f = partial_sum_formula(grandi)
print(f"partial sums of 1-1+1-...: poly part {f.poly.coeffs}, "
      f"sign part {[(str(r), q.coeffs) for r, q in f.exp_parts]}")
print(f"value(1-1+1-...)  = {sum_series(grandi)}")
print(f"value(-1+1-1+...) = {sum_series(mirror)}")
assert sum_series(grandi) + sum_series(mirror) == 0

print()
print("== Blanking out alternate terms is not a null operation ==")
naturals = parse_series("sum(i=1..omega, i)")
blanked = naturals.blank_alternate("even")   # 0 + 2 + 0 + 4 + ...
evens = parse_series("sum(i=1..omega, 2*i)")  # 2 + 4 + 6 + ...
print("0+2+0+4+... terms:", [blanked.term_at(i) for i in range(1, 7)])
print(f"value(0+2+0+4+...) = {sum_series(blanked)}")
print(f"value(2+4+6+...)   = {sum_series(evens)}")
print("same halo?", sum_series(blanked).same_halo(sum_series(evens)))

print()
print("== Euler's alternating naturals ==")
alternating = parse_series("sum(i=1..omega, i*(-1)^(i-1))")
print(f"value(1-2+3-4+...) = {sum_series(alternating)}")
prepended = parse_series("sum(i=1..omega, (i-1)*(-1)^i)")
print(f"value(0+1-2+3-...) = {sum_series(prepended)}   (prepending a zero changes nothing here)")
assert sum_series(alternating) == sum_series(prepended) == F(1, 4)

print()
print("== Spacing the ones with zeroes ==")
ones = parse_series("sum(i=1..omega, 1)")
odd_slots = ones.stretch2("odd")    # 1 + 0 + 1 + 0 + ...
even_slots = ones.stretch2("even")  # 0 + 1 + 0 + 1 + ...
print(f"value(1+0+1+0+...) = {sum_series(odd_slots)}")
print(f"value(0+1+0+1+...) = {sum_series(even_slots)}")
total = sum_series(odd_slots) + sum_series(even_slots)
print(f"their sum          = {total}  (the plain ones series again)")
assert total == OMEGA and odd_slots + even_slots == ones

print()
print("== Vanishing-sign rule for small negative bases is opt-in ==")
shrinking = parse_series("sum(i=1..omega, (-1/2)^i)")
try:
    sum_series(shrinking)
except Exception as exc:
    print(f"default mode: {type(exc).__name__}: {exc}")
value = sum_series(shrinking, EvalConfig(neg_base_mode="conjecture"))
print(f"conjecture mode: value(-1/2 + 1/4 - 1/8 + ...) = {value}")

growing = parse_series("sum(i=1..omega, (-2)^i)")
try:
    sum_series(growing, EvalConfig(neg_base_mode="conjecture"))
except Exception as exc:
    print(f"base -2 stays refused: {type(exc).__name__}: {exc}")
