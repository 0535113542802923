"""Exact rational scalars.

Every quantity in this package except the floating-point mean estimates in
:mod:`omegasum.oracle` is an exact ``fractions.Fraction``.  The stdlib type
already maintains the canonical form relied on everywhere (reduced terms,
positive denominator, zero stored as 0/1), so this module only adds the
coercion helper used at API boundaries.  Floats are rejected on purpose:
nothing in the symbolic layer may round.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["Rational", "rational"]

Rational = Fraction


def rational(value, denominator=None) -> Fraction:
    """Coerce an int, a string like ``"3/4"``, or a Fraction to a Rational.

    With two arguments, builds ``value / denominator`` from integers.
    Floats raise TypeError so inexact values cannot leak in silently.
    """
    if denominator is not None:
        if isinstance(value, float) or isinstance(denominator, float):
            raise TypeError("rational() does not accept floats")
        return Fraction(value, denominator)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")
