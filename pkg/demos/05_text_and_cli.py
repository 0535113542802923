"""The text grammar and the command line, driven programmatically.

Series are written sum(i=<start>..omega, <body>); values use the symbol w.
Parsing normalizes eagerly and printing is canonical, so format -> parse is
the identity on values.
"""

from omegasum import (
    GRAMMAR,
    format_hyperreal,
    format_series,
    parse_hyperreal,
    parse_series,
    sum_series,
)
from omegasum.cli import run_cli

print("== The grammar ==")
print(GRAMMAR)

print("== Parse, evaluate, print, parse again ==")
series = parse_series("sum(i=1..omega, i*(((-1)^i + 1)/2))")
print(f"series atoms: {[(str(a.coeff), a.power, str(a.ratio)) for a in series.atoms]}")
value = sum_series(series)
text = format_hyperreal(value)
print(f"value: {text}")
assert parse_hyperreal(text) == value
print(f"series round trip: {format_series(series)}")

print()
print("== Parse errors carry character offsets ==")
for bad in ["sum(i=1..omega, i +)", "sum(i=1..100, i)", "sum(i=1..omega, i^i)"]:
    try:
        parse_series(bad)
    except Exception as exc:
        print(f"{bad!r}: {type(exc).__name__}: {exc}")

print()
print("== The same machinery exposed as a CLI ==")
for argv in [
    ["eval", "sum(i=1..omega, i)"],
    ["eval", "--principal", "sum(i=1..omega, i)"],
    ["eval", "--std", "sum(i=1..omega, (-1)^(i+1))"],
    ["eval", "--json", "sum(i=1..omega, (1/2)^(i-1))"],
    ["partial", "--n", "5", "sum(i=1..omega, i)"],
    ["oracle", "--N", "200", "sum(i=1..omega, i*(-1)^(i-1))"],
    ["oracle", "--holder", "1", "--N", "100000", "sum(i=1..omega, (-1)^(i+1))"],
]:
    print(f"$ omegasum {' '.join(argv)}")
    code = run_cli(argv)
    assert code == 0, argv
