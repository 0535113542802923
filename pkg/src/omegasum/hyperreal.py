"""The hyperreal number type used as the value of a series.

A value is a finite formal sum of terms ``c * w^p * b^w`` where ``w`` is the
infinite unit (the count of positive integers), ``c`` is a nonzero rational,
``p`` an integer and ``b`` a positive rational.  Terms are keyed by the pair
``(b, p)`` and kept sorted by descending asymptotic dominance: a larger base
outgrows any power, and among equal bases the larger power wins.  That makes
the representation canonical, gives a total order compatible with addition
and multiplication by positives, and keeps every operation exact.

The type is immutable; every operation returns a fresh value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from .polynomial import Polynomial

__all__ = ["HyperTerm", "Hyperreal", "OMEGA", "eval_poly_at_shifted_omega"]

_Scalar = Union[int, Fraction]
_ONE = Fraction(1)


@dataclass(frozen=True)
class HyperTerm:
    """One monomial ``coeff * w^power * base^w`` with coeff != 0, base > 0."""

    coeff: Fraction
    power: int = 0
    base: Fraction = _ONE

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        object.__setattr__(self, "base", Fraction(self.base))
        if self.coeff == 0:
            raise ValueError("hyperreal terms must have a nonzero coefficient")
        if self.base <= 0:
            raise ValueError("hyperreal terms must have a positive base")

    @property
    def key(self) -> tuple[Fraction, int]:
        """Dominance key: base first, then power."""
        return (self.base, self.power)

    def value_at(self, n: int) -> Fraction:
        """The real number coeff * n^power * base^n, exactly."""
        return self.coeff * Fraction(n) ** self.power * self.base**n


class Hyperreal:
    """A finite formal combination of :class:`HyperTerm`, canonically sorted."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable = ()):
        merged: dict[tuple[Fraction, int], Fraction] = {}
        for t in terms:
            if not isinstance(t, HyperTerm):
                t = HyperTerm(*t)
            merged[t.key] = merged.get(t.key, Fraction(0)) + t.coeff
        kept = [
            HyperTerm(c, power, base)
            for (base, power), c in merged.items()
            if c != 0
        ]
        kept.sort(key=lambda t: t.key, reverse=True)
        self._terms = tuple(kept)

    # -- construction ------------------------------------------------------

    @classmethod
    def from_rational(cls, value: _Scalar) -> "Hyperreal":
        value = Fraction(value)
        if value == 0:
            return cls()
        return cls((HyperTerm(value),))

    @classmethod
    def term(cls, coeff: _Scalar, power: int = 0, base: _Scalar = 1) -> "Hyperreal":
        """Single-term value; a zero coefficient yields the zero value."""
        coeff = Fraction(coeff)
        if coeff == 0:
            return cls()
        return cls((HyperTerm(coeff, power, Fraction(base)),))

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> tuple[HyperTerm, ...]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        """True when the value is exactly a (finite) rational number."""
        if not self._terms:
            return True
        return len(self._terms) == 1 and self._terms[0].key == (_ONE, 0)

    def rational_value(self) -> Optional[Fraction]:
        """The exact rational this value equals, or None if it is not one."""
        if not self._terms:
            return Fraction(0)
        if self.is_rational():
            return self._terms[0].coeff
        return None

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, Hyperreal):
            return other
        if isinstance(other, (int, Fraction)):
            return Hyperreal.from_rational(other)
        return None

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return Hyperreal(self._terms + rhs._terms)

    __radd__ = __add__

    def __neg__(self) -> "Hyperreal":
        out = Hyperreal()
        out._terms = tuple(HyperTerm(-t.coeff, t.power, t.base) for t in self._terms)
        return out

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        products = [
            HyperTerm(a.coeff * b.coeff, a.power + b.power, a.base * b.base)
            for a in self._terms
            for b in rhs._terms
        ]
        return Hyperreal(products)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a nonzero rational scalar only (values form no field here)."""
        if isinstance(other, Hyperreal):
            scalar = other.rational_value()
            if scalar is None:
                return NotImplemented
            other = scalar
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self * (Fraction(1) / Fraction(other))

    def __pow__(self, exponent: int) -> "Hyperreal":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.monomial_inverse() ** (-exponent)
        out = Hyperreal.from_rational(1)
        for _ in range(exponent):
            out = out * self
        return out

    def monomial_inverse(self) -> "Hyperreal":
        """Invert a single-term value: 1/(c w^p b^w) = (1/c) w^-p (1/b)^w."""
        if len(self._terms) != 1:
            raise ValueError("only single-term hyperreals can be inverted")
        t = self._terms[0]
        return Hyperreal((HyperTerm(1 / t.coeff, -t.power, 1 / t.base),))

    # -- order -------------------------------------------------------------

    def compare(self, other) -> int:
        """-1, 0, 1 by the sign of the dominant term of the difference."""
        rhs = self._coerce(other)
        if rhs is None:
            raise TypeError(f"cannot compare Hyperreal with {type(other).__name__}")
        diff = self - rhs
        if not diff._terms:
            return 0
        return 1 if diff._terms[0].coeff > 0 else -1

    def __eq__(self, other) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._terms == rhs._terms

    def __hash__(self) -> int:
        r = self.rational_value()
        if r is not None:
            return hash(r)
        return hash(self._terms)

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- structure of the value --------------------------------------------

    def principal_value(self) -> "Hyperreal":
        """The dominant term, coefficient included; zero for zero."""
        if not self._terms:
            return Hyperreal()
        return Hyperreal((self._terms[0],))

    def same_halo(self, other) -> bool:
        """True when both values share a principal value."""
        rhs = self._coerce(other)
        if rhs is None:
            raise TypeError(f"cannot compare Hyperreal with {type(other).__name__}")
        return self.principal_value() == rhs.principal_value()

    def standard_part(self) -> Optional[Fraction]:
        """Finite part of the value, or None when any term is infinite.

        A term is infinite when its base exceeds 1, or its base is 1 and its
        power is positive.  Terms with base below 1, or base 1 and negative
        power, are infinitesimal and are discarded.
        """
        finite = Fraction(0)
        for t in self._terms:
            if t.base > 1 or (t.base == 1 and t.power > 0):
                return None
            if t.key == (_ONE, 0):
                finite = t.coeff
        return finite

    def ratio_principal(self, other: "Hyperreal") -> "Hyperreal":
        """Quotient of principal values, as a single monomial.

        Zero numerator gives zero; a zero divisor raises ZeroDivisionError.
        """
        rhs = self._coerce(other)
        if rhs is None or rhs.is_zero():
            raise ZeroDivisionError("ratio of principal values with zero divisor")
        if self.is_zero():
            return Hyperreal()
        a = self._terms[0]
        b = rhs._terms[0]
        return Hyperreal((HyperTerm(a.coeff / b.coeff, a.power - b.power, a.base / b.base),))

    # -- rendering ----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, t in enumerate(self._terms):
            body = _term_body(abs(t.coeff), t.power, t.base)
            if k == 0:
                parts.append(body if t.coeff > 0 else "-" + body)
            else:
                parts.append((" + " if t.coeff > 0 else " - ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Hyperreal({self})"


def _term_body(coeff: Fraction, power: int, base: Fraction) -> str:
    """Render |coeff| * w^power * base^w in the canonical text form."""
    factors = []
    symbolic = power != 0 or base != 1
    if coeff.numerator != 1 or not symbolic:
        factors.append(str(coeff.numerator))
    if power == 1:
        factors.append("w")
    elif power != 0:
        factors.append(f"w^{power}")
    if base != 1:
        base_text = str(base.numerator) if base.denominator == 1 else f"({base})"
        factors.append(f"{base_text}^w")
    text = "*".join(factors)
    if coeff.denominator != 1:
        text += f"/{coeff.denominator}"
    return text


OMEGA = Hyperreal.term(1, power=1)


def eval_poly_at_shifted_omega(poly: Polynomial, offset: int = 0) -> Hyperreal:
    """Expand p(w + offset) into a hyperreal with base-1 terms."""
    shifted = poly.shift(offset)
    return Hyperreal(
        HyperTerm(c, k, _ONE) for k, c in enumerate(shifted.coeffs) if c != 0
    )
