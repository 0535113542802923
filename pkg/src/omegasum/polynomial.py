"""Dense univariate polynomials over exact rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

__all__ = ["Polynomial"]

_Scalar = Union[int, Fraction]


class Polynomial:
    """Immutable polynomial; ``coeffs[k]`` multiplies ``x**k``.

    Trailing zero coefficients are stripped, so equal polynomials compare
    equal structurally.  The zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[_Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial, -1 for zero."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def __call__(self, x: _Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self._coeffs)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if self.is_zero() or other.is_zero():
                return Polynomial()
            out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
            for i, a in enumerate(self._coeffs):
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
            return Polynomial(out)
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self._coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def shift(self, offset: _Scalar) -> "Polynomial":
        """Return p(x + offset), expanded exactly."""
        return self.compose_affine(Fraction(1), offset)

    def compose_affine(self, scale: _Scalar, offset: _Scalar) -> "Polynomial":
        """Return p(scale*x + offset), expanded exactly (Horner over x)."""
        lin = Polynomial([offset, scale])
        acc = Polynomial()
        for c in reversed(self._coeffs):
            acc = acc * lin + Polynomial([c])
        return acc

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        if self.is_zero():
            return "Polynomial()"
        return f"Polynomial(({', '.join(str(c) for c in self._coeffs)}))"
